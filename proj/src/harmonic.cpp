#include "harmonia/harmonic.hpp"

#include <algorithm>

namespace harmonia {

harmonic_basis_t harmonic_basis(const filtration& f, int p, const rational& t, backend bk) {
	exact_matrix down = f.boundary_matrix(p, t, bk);       // ∂_p
	exact_matrix up = f.coboundary_matrix(p, t, bk);       // δ^p = transpose ∂_{p+1}
	harmonic_basis_t h;
	h.t = t;
	h.p = p;
	h.basis = kernel_basis(vstack(down, up));
	return h;
}

span_interval harmonic_span(const filtration& f, const chain& z) {
	if (z.zero()) throw chain_error(chain_error::kind::zero_chain, "harmonic_span: zero chain");
	auto s = support_time(f, z);
	if (!s)
		throw chain_error(chain_error::kind::unknown_simplex,
		                  "harmonic_span: chain uses simplices outside the complex");
	if (!boundary(z).zero())
		throw chain_error(chain_error::kind::not_a_cycle, "harmonic_span: chain is not a cycle");

	span_interval out;
	// first coface (in time order) whose boundary pairs nontrivially with z decides the death;
	// if it arrives no later than the support time, the span is empty
	for (const auto& e : f.simplices(z.p + 1)) {
		if (inner(z, boundary(e.s)) == 0) continue;
		if (e.t <= *s) return out;  // empty
		out.empty = false;
		out.start = *s;
		out.end = time_value(e.t);
		return out;
	}
	out.empty = false;
	out.start = *s;
	out.end = time_value::infinity();
	return out;
}

chain harmonic_projection(const filtration& f, const chain& z, const rational& t) {
	if (!boundary(z).zero())
		throw chain_error(chain_error::kind::not_a_cycle, "harmonic_projection: not a cycle");
	auto s = support_time(f, z);
	if (!z.zero() && (!s || *s > t))
		throw chain_error(chain_error::kind::unknown_simplex,
		                  "harmonic_projection: chain not supported in K_t");
	if (z.zero()) return chain(z.p);

	exact_matrix d = f.boundary_matrix(z.p + 1, t);  // ∂_{p+1} at t
	std::vector<rational> zv = chain_to_vector(f, z, t);
	if (d.cols() == 0) return z;  // no cofaces: already harmonic
	exact_matrix dt = transpose(d);
	// solve (δ ∘ ∂) x = -δ z, then z + ∂ x is the harmonic representative of [z]
	std::vector<rational> rhs = matvec(dt, zv);
	for (auto& v : rhs) v = -v;
	auto x = solve(matmul(dt, d), rhs);
	if (!x)
		throw chain_error(chain_error::kind::repair_infeasible,
		                  "harmonic_projection: normal equations inconsistent");
	std::vector<rational> corr = matvec(d, *x);
	chain out(z.p);
	const auto& cols = f.simplices(z.p);
	for (std::size_t i = 0; i < corr.size(); ++i) {
		rational v = zv[i] + corr[i];
		if (v != 0) out.coeffs.emplace(cols[i].s, v);
	}
	return out;
}

barcode barcode_from_rank_table(const rank_table_t& rt) {
	const std::size_t m = rt.times.size();
	// 1-based accessors with the boundary conventions r[0][*] = 0 and r[i][i] = h[i]
	auto r = [&](std::size_t i, std::size_t j) -> long {
		if (i == 0) return 0;
		if (j < i) throw invariant_violation("rank table read below diagonal");
		return static_cast<long>(rt.r[i - 1][j - 1]);
	};
	barcode bc;
	bc.p = rt.p;
	for (std::size_t i = 1; i <= m; ++i) {
		long births = static_cast<long>(rt.h[i - 1]) - (i > 1 ? r(i - 1, i) : 0);
		if (births < 0)
			throw invariant_violation("canonical barcode: negative birth count");
		long emitted = 0;
		for (std::size_t j = i + 1; j <= m; ++j) {
			long mult = (r(i, j - 1) - r(i, j)) - (r(i - 1, j - 1) - r(i - 1, j));
			if (mult < 0)
				throw invariant_violation("canonical barcode: negative multiplicity");
			for (long k = 0; k < mult; ++k) {
				bar b;
				b.p = rt.p;
				b.birth = rt.times[i - 1];
				b.death = time_value(rt.times[j - 1]);
				bc.bars.push_back(b);
			}
			emitted += mult;
		}
		long inf_mult = r(i, m) - r(i - 1, m);
		if (inf_mult < 0)
			throw invariant_violation("canonical barcode: negative infinite multiplicity");
		for (long k = 0; k < inf_mult; ++k) {
			bar b;
			b.p = rt.p;
			b.birth = rt.times[i - 1];
			b.death = time_value::infinity();
			bc.bars.push_back(b);
		}
		emitted += inf_mult;
		if (emitted != births)
			throw invariant_violation("canonical barcode: births and deaths disagree");
	}
	bc.sort_canonical();
	return bc;
}

barcode canonical_barcode(const filtration& f, int p, backend bk) {
	return barcode_from_rank_table(rank_table(f, p, bk));
}

barcode subordinate_barcode(const filtration& f, int p) {
	std::vector<persistence_pair> basis;
	for (auto& pp : reduce(f))
		if (pp.p == p) basis.push_back(std::move(pp));
	return subordinate_barcode(f, p, basis);
}

barcode subordinate_barcode(const filtration& f, int p, const std::vector<persistence_pair>& basis) {
	barcode out;
	out.p = p;
	const auto& cofaces = f.simplices(p + 1);  // (time, lex) order
	for (const auto& pp : basis) {
		if (pp.p != p)
			throw chain_error(chain_error::kind::not_a_cycle,
			                  "subordinate_barcode: basis bar of wrong dimension");
		if (!(time_value(pp.birth) < pp.death)) continue;  // empty interval tiles nothing
		chain cur = harmonic_projection(f, pp.representative, pp.birth);
		if (cur.zero())
			throw invariant_violation("subordinate_barcode: representative is trivial at birth");
		rational cur_birth = pp.birth;
		std::size_t i = 0;
		while (i < cofaces.size() && cofaces[i].t <= pp.birth) ++i;  // projection handled these
		while (i < cofaces.size()) {
			const rational t = cofaces[i].t;
			if (!(time_value(t) < pp.death)) break;  // the parent ends before/at this batch
			bool hit = false;
			for (std::size_t j = i; j < cofaces.size() && cofaces[j].t == t; ++j)
				if (inner(cur, boundary(cofaces[j].s)) != 0) {
					hit = true;
					break;
				}
			if (hit) {
				bar b;
				b.p = p;
				b.birth = cur_birth;
				b.death = time_value(t);
				b.representative = cur;
				b.parent_birth = pp.birth;
				b.parent_death = pp.death;
				out.bars.push_back(std::move(b));
				cur = harmonic_projection(f, cur, t);
				if (cur.zero())
					throw chain_error(chain_error::kind::repair_infeasible,
					                  "subordinate_barcode: repair died before the bar");
				cur_birth = t;
			}
			while (i < cofaces.size() && cofaces[i].t == t) ++i;
		}
		if (pp.death.finite) {
			// the class dies here, so the current representative must stop being a cocycle
			bool hit = false;
			for (const auto& e : cofaces)
				if (e.t == pp.death.q && inner(cur, boundary(e.s)) != 0) {
					hit = true;
					break;
				}
			if (!hit)
				throw invariant_violation(
				    "subordinate_barcode: representative survived its own death");
		}
		bar last;
		last.p = p;
		last.birth = cur_birth;
		last.death = pp.death;
		last.representative = cur;
		last.parent_birth = pp.birth;
		last.parent_death = pp.death;
		out.bars.push_back(std::move(last));
	}
	out.sort_canonical();
	return out;
}

}  // namespace harmonia
