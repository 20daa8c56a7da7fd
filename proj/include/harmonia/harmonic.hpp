#pragma once

#include "harmonia/persistence.hpp"

namespace harmonia {

// raised on broken internal invariants (e.g. negative multiplicities); cli maps it to exit 3
struct invariant_violation : std::logic_error {
	using std::logic_error::logic_error;
};

struct chain_error : std::invalid_argument {
	enum class kind { zero_chain, not_a_cycle, unknown_simplex, repair_infeasible };
	kind what_kind;
	chain_error(kind k, const std::string& msg) : std::invalid_argument(msg), what_kind(k) {}
};

// basis of Har_p(K_t) = Z_p ∩ Z^p: canonical kernel of the stacked [∂_p ; δ^p] matrix.
// columns are coordinate vectors over the p-simplices present at t (column order)
struct harmonic_basis_t {
	rational t;
	int p = 0;
	exact_matrix basis;
	std::size_t dim() const { return basis.cols(); }
};

harmonic_basis_t harmonic_basis(const filtration& f, int p, const rational& t,
                                backend bk = backend::dense);

// maximal interval [start, end) on which the cycle z is harmonic;
// empty when z already has a coboundary at its own support time
struct span_interval {
	bool empty = true;
	rational start;
	time_value end;
};

span_interval harmonic_span(const filtration& f, const chain& z);

// the unique harmonic cycle homologous to z in K_t (0 when [z] is trivial there)
chain harmonic_projection(const filtration& f, const chain& z, const rational& t);

// r[i][j] = dim( Har(K_{t_i}) zero-padded into C_p(K_{t_j}) ∩ Har(K_{t_j}) ), 0-based i <= j;
// h[i] = dim Har(K_{t_i}). rows are independent and evaluated in parallel when asked.
struct rank_table_t {
	int p = 0;
	std::vector<rational> times;
	std::vector<std::size_t> h;
	std::vector<std::vector<std::size_t>> r;  // r[i][j] valid for j >= i; zero elsewhere
};

rank_table_t rank_table(const filtration& f, int p, backend bk = backend::dense,
                        isect_method method = isect_method::ranks);
// serial reference implementation kept for testing the parallel kernel
rank_table_t rank_table_serial(const filtration& f, int p, backend bk = backend::dense,
                               isect_method method = isect_method::ranks);

// canonical barcode of harmonic chains, assembled from the rank table:
// births at harmonic-dimension increases, deaths by inclusion-exclusion on r
barcode canonical_barcode(const filtration& f, int p, backend bk = backend::dense);
barcode barcode_from_rank_table(const rank_table_t& rt);

// subordinate (unstable) harmonic barcode: persistence bars split at the times
// their harmonic representative stops being a cocycle, with repairs in between
barcode subordinate_barcode(const filtration& f, int p);
// same, against a caller-supplied persistence basis (must be bars of dimension p with reps)
barcode subordinate_barcode(const filtration& f, int p, const std::vector<persistence_pair>& basis);

}  // namespace harmonia
