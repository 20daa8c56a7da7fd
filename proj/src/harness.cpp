#include "harmonia/harness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "harmonia/bottleneck.hpp"
#include "harmonia/chain.hpp"

namespace harmonia {

std::uint64_t rng64::below(std::uint64_t n) {
	if (n == 0) throw std::invalid_argument("rng64::below: empty range");
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
	std::uint64_t x;
	do {
		x = gen();
	} while (x >= limit);
	return x % n;
}

long rng64::range(long lo, long hi) {
	if (hi < lo) throw std::invalid_argument("rng64::range: empty range");
	return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool rng64::chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

namespace {

void put(std::vector<filtration_entry>& es, const rational& t, std::vector<int> verts) {
	es.push_back({t, simplex{std::move(verts)}});
}

}  // namespace

filtration filled_triangle_filtration() {
	std::vector<filtration_entry> es;
	for (int v = 0; v < 3; ++v) put(es, 0, {v});
	put(es, 1, {0, 1});
	put(es, 1, {1, 2});
	put(es, 1, {0, 2});
	put(es, 2, {0, 1, 2});
	return filtration::from_entries(es);
}

filtration square_two_triangles_filtration() {
	std::vector<filtration_entry> es;
	for (int v = 0; v < 4; ++v) put(es, 0, {v});
	put(es, 1, {0, 1});
	put(es, 1, {1, 2});
	put(es, 1, {2, 3});
	put(es, 1, {0, 3});
	put(es, 2, {0, 2});
	put(es, rational(5, 2), {0, 1, 2});
	put(es, 3, {0, 2, 3});
	return filtration::from_entries(es);
}

filtration book_filtration() {
	std::vector<filtration_entry> es;
	for (int v = 1; v <= 6; ++v) put(es, v, {v});
	put(es, 7, {1, 2});
	put(es, 8, {2, 3});
	put(es, 9, {1, 3});
	put(es, 10, {3, 4});
	put(es, 11, {1, 4});
	put(es, 12, {1, 5});
	put(es, 13, {3, 5});
	put(es, 14, {3, 6});
	put(es, 15, {1, 6});
	put(es, 16, {1, 3, 6});
	put(es, 17, {1, 3, 5});
	put(es, 18, {1, 3, 4});
	put(es, 19, {1, 2, 3});
	return filtration::from_entries(es);
}

std::pair<filtration, filtration> edge_swap_pair(long scale) {
	if (scale < 1) throw std::invalid_argument("edge_swap_pair: scale must be positive");
	auto common = [&](std::vector<filtration_entry>& es) {
		for (int v = 1; v <= 5; ++v) put(es, 0, {v});
		put(es, 1, {1, 4});
		put(es, 2, {2, 4});
		put(es, 3, {1, 3});
		put(es, 6, {1, 5});
		put(es, 7, {2, 5});
		put(es, rational(8) * scale, {1, 2, 5});
		put(es, rational(9) * scale, {1, 2, 4});
		put(es, rational(10) * scale, {1, 2, 3});
	};
	std::vector<filtration_entry> left, right;
	common(left);
	put(left, 4, {1, 2});
	put(left, 5, {2, 3});
	common(right);
	put(right, 5, {1, 2});
	put(right, 4, {2, 3});
	return {filtration::from_entries(left), filtration::from_entries(right)};
}

filtration fan_disc_filtration(int k) {
	if (k < 1) throw std::invalid_argument("fan_disc_filtration: k must be positive");
	std::vector<filtration_entry> es;
	for (int v = 0; v <= k + 1; ++v) put(es, 0, {v});
	for (int i = 1; i <= k + 1; ++i) put(es, 1, {0, i});
	for (int i = 1; i <= k; ++i) put(es, 1, {i, i + 1});
	if (k >= 2) put(es, 1, {1, k + 1});
	for (int i = 1; i <= k; ++i) put(es, rational(i + 1), {0, i, i + 1});
	return filtration::from_entries(es);
}

filtration random_filtration(std::uint64_t seed, int max_vertices, int max_dim, std::uint32_t include_pct) {
	if (max_vertices < 2) throw std::invalid_argument("random_filtration: need at least two vertices");
	rng64 g(seed);
	const int nv = 2 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_vertices) - 1));
	const rational half(1, 2);

	std::vector<filtration_entry> es;
	std::map<simplex, rational> present;
	auto bump = [&](const rational& base) {
		rational t = base + g.range(0, 2);
		if (g.chance(1, 4)) t += half;
		return t;
	};

	for (int v = 0; v < nv; ++v) {
		simplex s{{v}};
		rational t = g.range(0, 2);
		present[s] = t;
		es.push_back({t, s});
	}
	if (max_dim >= 1) {
		for (int i = 0; i < nv; ++i)
			for (int j = i + 1; j < nv; ++j) {
				if (!g.chance(include_pct, 100)) continue;
				rational base = std::max(present[simplex{{i}}], present[simplex{{j}}]);
				simplex s{{i, j}};
				rational t = bump(base);
				present[s] = t;
				es.push_back({t, s});
			}
	}
	auto all_facets_present = [&](const simplex& s, rational& base) {
		base = 0;
		for (const auto& [face, sign] : boundary_faces(s)) {
			(void)sign;
			auto it = present.find(face);
			if (it == present.end()) return false;
			if (it->second > base) base = it->second;
		}
		return true;
	};
	if (max_dim >= 2) {
		for (int i = 0; i < nv; ++i)
			for (int j = i + 1; j < nv; ++j)
				for (int k = j + 1; k < nv; ++k) {
					simplex s{{i, j, k}};
					rational base;
					if (!all_facets_present(s, base) || !g.chance(include_pct, 100)) continue;
					rational t = bump(base);
					present[s] = t;
					es.push_back({t, s});
				}
	}
	if (max_dim >= 3) {
		for (int i = 0; i < nv; ++i)
			for (int j = i + 1; j < nv; ++j)
				for (int k = j + 1; k < nv; ++k)
					for (int l = k + 1; l < nv; ++l) {
						simplex s{{i, j, k, l}};
						rational base;
						if (!all_facets_present(s, base) || !g.chance(include_pct, 100)) continue;
						rational t = bump(base);
						present[s] = t;
						es.push_back({t, s});
					}
	}
	return filtration::from_entries(es);
}

filtration refine_to_unit_steps(const filtration& f) {
	std::vector<filtration_entry> es;
	long step = 0;
	for (const filtration_entry& e : f.entries_sorted()) es.push_back({rational(++step), e.s});
	return filtration::from_entries(es);
}

std::string value_mode_str(value_mode m) { return m == value_mode::lower_star ? "lower_star" : "monotone"; }

namespace {

filtration extend_from_vertex_values(const filtration& base, const std::map<int, rational>& vv) {
	std::vector<filtration_entry> es;
	for (const filtration_entry& e : base.entries_sorted()) {
		rational t = vv.at(e.s.v.front());
		for (int v : e.s.v) {
			const rational& x = vv.at(v);
			if (x > t) t = x;
		}
		es.push_back({t, e.s});
	}
	return filtration::from_entries(es);
}

}  // namespace

filtration lower_star_extension(const filtration& f) {
	std::map<int, rational> vv;
	for (const filtration_entry& e : f.entries_sorted())
		if (e.s.dim() == 0) vv[e.s.v[0]] = e.t;
	return extend_from_vertex_values(f, vv);
}

filtration random_values(const filtration& base, std::uint64_t seed, value_mode mode) {
	rng64 g(seed);
	const rational half(1, 2);
	if (mode == value_mode::lower_star) {
		std::map<int, rational> vv;
		for (const filtration_entry& e : base.entries_sorted())
			if (e.s.dim() == 0) vv[e.s.v[0]] = rational(g.range(0, 16)) * half;
		return extend_from_vertex_values(base, vv);
	}
	std::map<simplex, rational> val;
	std::vector<filtration_entry> es;
	for (const filtration_entry& e : base.entries_sorted()) {
		rational t = 0;
		if (e.s.dim() == 0) {
			t = rational(g.range(0, 8)) * half;
		} else {
			for (const auto& [face, sign] : boundary_faces(e.s)) {
				(void)sign;
				const rational& x = val.at(face);
				if (x > t) t = x;
			}
			t += rational(g.range(0, 4)) * half;
		}
		val[e.s] = t;
		es.push_back({t, e.s});
	}
	return filtration::from_entries(es);
}

filtration perturb(const filtration& f, const rational& eps, std::uint64_t seed) {
	rng64 g(seed);
	std::map<simplex, rational> val;
	std::vector<filtration_entry> es;
	for (const filtration_entry& e : f.entries_sorted()) {
		rational t = e.t + eps * g.range(-8, 8) / 8;
		if (e.s.dim() > 0) {  // monotone repair: never drop below a face
			for (const auto& [face, sign] : boundary_faces(e.s)) {
				(void)sign;
				const rational& x = val.at(face);
				if (x > t) t = x;
			}
		}
		val[e.s] = t;
		es.push_back({t, e.s});
	}
	return filtration::from_entries(es);
}

filtration perturb_lower_star(const filtration& f, const rational& eps, std::uint64_t seed) {
	rng64 g(seed);
	std::map<int, rational> vv;
	for (const filtration_entry& e : f.entries_sorted())
		if (e.s.dim() == 0) vv[e.s.v[0]] = e.t + eps * g.range(-8, 8) / 8;
	return extend_from_vertex_values(f, vv);
}

rational linf_distance(const filtration& a, const filtration& b) {
	if (a.size() != b.size()) throw std::invalid_argument("linf_distance: different complexes");
	rational d = 0;
	for (const filtration_entry& e : a.entries_sorted()) {
		auto tb = b.time_of(e.s);
		if (!tb) throw std::invalid_argument("linf_distance: different complexes");
		rational x = abs(e.t - *tb);
		if (x > d) d = x;
	}
	return d;
}

std::optional<rational> min_time_gap(const filtration& f) {
	const auto& ts = f.critical_times();
	if (ts.size() < 2) return std::nullopt;
	rational best = ts[1] - ts[0];
	for (std::size_t i = 2; i < ts.size(); ++i) {
		rational d = ts[i] - ts[i - 1];
		if (d < best) best = d;
	}
	return best;
}

trial_report stability_trial_on(const filtration& f, const rational& eps, std::uint64_t seed, int p,
                                value_mode mode) {
	filtration base = mode == value_mode::lower_star ? lower_star_extension(f) : f;
	filtration g = mode == value_mode::lower_star ? perturb_lower_star(base, eps, seed) : perturb(base, eps, seed);

	trial_report r;
	r.seed = seed;
	r.mode = mode;
	r.p = p;
	r.simplex_count = base.size();
	r.eps_requested = eps;
	r.eps_actual = linf_distance(base, g);

	barcode cf = canonical_barcode(base, p);
	barcode cg = canonical_barcode(g, p);
	r.d_canonical = bottleneck_distance(cf, cg).distance;
	barcode df = persistence_barcode(base, p, false);
	barcode dg = persistence_barcode(g, p, false);
	r.d_persistence = bottleneck_distance(df, dg).distance;

	time_value bound(r.eps_actual);
	r.pass = !(bound < r.d_canonical) && !(bound < r.d_persistence);
	return r;
}

trial_report stability_trial(std::uint64_t seed, int max_vertices, int p, value_mode mode,
                             std::optional<rational> eps_override) {
	rng64 g(seed);
	filtration base = random_filtration(seed ^ 0x9e3779b97f4a7c15ULL, max_vertices, 2, 55);
	filtration f = random_values(base, seed * 0x2545f4914f6cdd1dULL + 1, mode);
	rational eps;
	if (eps_override) {
		eps = *eps_override;
	} else {
		rational gap = min_time_gap(f).value_or(rational(1));
		eps = gap / 4 * g.range(1, 7) / 8;
	}
	return stability_trial_on(f, eps, seed, p, mode);
}

namespace {

// grows a column basis one vector at a time; add() reports whether the new
// column was independent of the ones before it
struct incremental_rank {
	std::vector<std::vector<rational>> cols;  // reduced, pivot normalized to 1
	std::vector<std::size_t> pivots;

	bool add(std::vector<rational> v) {
		for (std::size_t k = 0; k < cols.size(); ++k) {
			rational c = v[pivots[k]];
			if (c == 0) continue;
			const auto& base = cols[k];
			for (std::size_t r = 0; r < v.size(); ++r)
				if (base[r] != 0) v[r] -= c * base[r];
		}
		std::size_t piv = v.size();
		for (std::size_t r = 0; r < v.size(); ++r)
			if (v[r] != 0) {
				piv = r;
				break;
			}
		if (piv == v.size()) return false;
		rational pv = v[piv];
		for (auto& x : v)
			if (x != 0) x /= pv;
		cols.push_back(std::move(v));
		pivots.push_back(piv);
		return true;
	}
};

exact_matrix leading_cols(const exact_matrix& a, std::size_t k) {
	exact_matrix out(a.rows(), k, a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& val) {
			if (c < k) out.set(r, c, val);
		});
	return out;
}

}  // namespace

barcode greedy_oracle_barcode(const filtration& f, int p, backend bk) {
	barcode out;
	out.p = p;
	const auto& times = f.critical_times();
	const std::size_t m = times.size();
	if (m == 0) return out;

	std::vector<exact_matrix> H;
	H.reserve(m);
	for (const rational& t : times) H.push_back(harmonic_basis(f, p, t, bk).basis);

	exact_matrix bfull = f.boundary_matrix(p, times.back(), bk);

	incremental_rank ir;
	struct alive_t {
		rational birth;
		chain rep;
	};
	std::vector<alive_t> alive;  // kept in birth order

	std::size_t kp = 0;
	for (const filtration_entry& e : f.entries_sorted()) {
		const int d = e.s.dim();
		if (d == p) {
			++kp;
			std::vector<rational> col(bfull.rows(), rational(0));
			for (std::size_t r = 0; r < bfull.rows(); ++r) col[r] = bfull.at(r, kp - 1);
			if (ir.add(std::move(col))) continue;  // boundary grew instead of the cycle space

			// new cycle direction born at e.t: scan original critical times from
			// the top for the last one where it contributes a harmonic direction
			const std::size_t jT = static_cast<std::size_t>(
			    std::lower_bound(times.begin(), times.end(), e.t) - times.begin());
			exact_matrix zfull = kernel_basis(leading_cols(bfull, kp));
			exact_matrix zprev = kernel_basis(leading_cols(bfull, kp - 1));
			bool found = false;
			std::size_t N = 0;
			for (std::size_t j = m; j-- > jT;) {
				if (H[j].cols() == 0) continue;
				const std::size_t npj = f.count_at(p, times[j]);
				std::size_t lhs = intersection_dim(pad_rows(zfull, npj), H[j], isect_method::ranks);
				std::size_t rhs =
				    zprev.cols() == 0 ? 0 : intersection_dim(pad_rows(zprev, npj), H[j], isect_method::ranks);
				if (lhs > rhs) {
					found = true;
					N = j;
					break;
				}
			}
			if (!found) continue;  // never harmonic: zero-length class

			// extract a representative from Z(prefix) ∩ Har(t_N) that uses the
			// new simplex (coordinate kp-1)
			const std::size_t npN = f.count_at(p, times[N]);
			exact_matrix zpad = pad_rows(zfull, npN);
			exact_matrix ker = kernel_basis(hstack(zpad, negated(H[N])));
			std::optional<std::vector<rational>> wsel;
			for (std::size_t c = 0; c < ker.cols() && !wsel; ++c) {
				std::vector<rational> x(zpad.cols(), rational(0));
				for (std::size_t r = 0; r < zpad.cols(); ++r) x[r] = ker.at(r, c);
				std::vector<rational> w = matvec(zpad, x);
				if (w[kp - 1] != 0) wsel = std::move(w);
			}
			if (!wsel)
				throw invariant_violation("greedy_oracle_barcode: no representative uses the new simplex");
			alive.push_back({e.t, vector_to_chain(f, p, times[N], *wsel)});
		} else if (d == p + 1) {
			chain dt = boundary(e.s);
			std::vector<rational> cvals(alive.size());
			std::ptrdiff_t die = -1;
			for (std::size_t i = 0; i < alive.size(); ++i) {
				cvals[i] = inner(alive[i].rep, dt);
				if (die < 0 && cvals[i] != 0) die = static_cast<std::ptrdiff_t>(i);
			}
			if (die < 0) continue;
			const std::size_t di = static_cast<std::size_t>(die);
			for (std::size_t k = di + 1; k < alive.size(); ++k)
				if (cvals[k] != 0) alive[k].rep.axpy(-cvals[k] / cvals[di], alive[di].rep);
			if (alive[di].birth < e.t) {
				bar b;
				b.p = p;
				b.birth = alive[di].birth;
				b.death = time_value(e.t);
				b.representative = alive[di].rep;
				out.bars.push_back(b);
			}
			alive.erase(alive.begin() + die);
		}
	}
	for (auto& a : alive) {
		bar b;
		b.p = p;
		b.birth = a.birth;
		b.death = time_value::infinity();
		b.representative = std::move(a.rep);
		out.bars.push_back(b);
	}
	out.sort_canonical();
	return out;
}

std::vector<instability_row> instability_demo(const std::vector<long>& scales) {
	std::vector<instability_row> rows;
	for (long s : scales) {
		auto [left, right] = edge_swap_pair(s);
		instability_row row;
		row.scale = s;
		row.input_shift = linf_distance(left, right);
		row.d_subordinate = bottleneck_distance(subordinate_barcode(left, 1), subordinate_barcode(right, 1)).distance;
		row.d_canonical = bottleneck_distance(canonical_barcode(left, 1), canonical_barcode(right, 1)).distance;
		row.d_persistence =
		    bottleneck_distance(persistence_barcode(left, 1, false), persistence_barcode(right, 1, false)).distance;
		rows.push_back(row);
	}
	return rows;
}

}  // namespace harmonia
