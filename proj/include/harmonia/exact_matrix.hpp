#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "harmonia/rational.hpp"

namespace harmonia {

enum class backend { dense, sparse };

// exact rational matrix over Q; dimensions fixed at construction, entries default 0.
// dense = flat row-major storage; sparse = per-row sorted (col, value) lists.
// every reduction routine produces the canonical RREF, so results are identical
// across backends by construction.
class exact_matrix {
       public:
	exact_matrix() = default;
	exact_matrix(std::size_t rows, std::size_t cols, backend bk = backend::dense);
	static exact_matrix identity(std::size_t n, backend bk = backend::dense);

	std::size_t rows() const { return nr; }
	std::size_t cols() const { return nc; }
	backend storage() const { return bk; }

	rational at(std::size_t r, std::size_t c) const;
	void set(std::size_t r, std::size_t c, const rational& v);

	// visit nonzero entries of one row in ascending column order
	void for_each_in_row(std::size_t r, const std::function<void(std::size_t, const rational&)>& fn) const;

	bool operator==(const exact_matrix& o) const;  // entrywise, backend-agnostic

	// elimination helpers (used by echelon / solve)
	void swap_rows(std::size_t a, std::size_t b);
	void scale_row(std::size_t r, const rational& f);
	// row[dst] += f * row[src]
	void axpy_row(std::size_t dst, const rational& f, std::size_t src);
	// first row >= from with nonzero entry in column c, or npos
	std::size_t pivot_row(std::size_t c, std::size_t from) const;

	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

       private:
	std::size_t nr = 0, nc = 0;
	backend bk = backend::dense;
	std::vector<rational> dense_data;  // nr * nc
	std::vector<std::vector<std::pair<std::uint32_t, rational>>> sparse_rows;
};

struct echelon_result {
	exact_matrix rref;  // canonical reduced row echelon form
	std::size_t rank = 0;
	std::vector<std::size_t> pivot_cols;
};

echelon_result echelon(const exact_matrix& a);
std::size_t rank_of(const exact_matrix& a);

// columns form the canonical kernel basis: free variables set to 1 one at a
// time in ascending column order, pivot variables back-substituted
exact_matrix kernel_basis(const exact_matrix& a);

// deterministic solution of A x = b (free variables zero); nullopt if inconsistent
std::optional<std::vector<rational>> solve(const exact_matrix& a, const std::vector<rational>& b);

exact_matrix transpose(const exact_matrix& a);
exact_matrix hstack(const exact_matrix& a, const exact_matrix& b);
exact_matrix vstack(const exact_matrix& a, const exact_matrix& b);
// append zero rows to reach new_rows (zero padding a basis into a larger chain group)
exact_matrix pad_rows(const exact_matrix& a, std::size_t new_rows);
exact_matrix matmul(const exact_matrix& a, const exact_matrix& b);
exact_matrix negated(const exact_matrix& a);
std::vector<rational> matvec(const exact_matrix& a, const std::vector<rational>& x);

// dim(colspace(a) ∩ colspace(b)); requires a.rows() == b.rows().
// ranks:  rank(a) + rank(b) - rank([a|b])
// kernel: independent path used as a cross-check oracle: project ker[a|-b]
//         onto the a-block and take the rank of a * (that block)
enum class isect_method { ranks, kernel };
std::size_t intersection_dim(const exact_matrix& a, const exact_matrix& b,
                             isect_method m = isect_method::ranks);

}  // namespace harmonia
