#include "harmonia/persistence.hpp"

#include <algorithm>
#include <map>

namespace harmonia {

void barcode::sort_canonical() {
	std::stable_sort(bars.begin(), bars.end(), [](const bar& a, const bar& b) {
		if (a.birth != b.birth) return a.birth < b.birth;
		if (a.death != b.death) return a.death < b.death;
		return a.p < b.p;
	});
}

std::string barcode::str() const {
	barcode c = *this;
	c.sort_canonical();
	std::string out;
	for (const auto& b : c.bars) out += rational_str(b.birth) + " " + time_str(b.death) + "\n";
	return out;
}

bool barcode::same_bars(const barcode& o) const {
	if (p != o.p || bars.size() != o.bars.size()) return false;
	return str() == o.str();
}

std::size_t barcode::alive_at(const rational& t) const {
	std::size_t n = 0;
	for (const auto& b : bars)
		if (b.birth <= t && time_value(t) < b.death) ++n;
	return n;
}

namespace {

// sparse column: (row index, coefficient), sorted by row, no zeros
using column = std::vector<std::pair<std::size_t, rational>>;

void col_axpy(column& dst, const rational& f, const column& src) {
	column out;
	out.reserve(dst.size() + src.size());
	std::size_t i = 0, j = 0;
	while (i < dst.size() || j < src.size()) {
		if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
			out.push_back(dst[i++]);
		} else if (i == dst.size() || src[j].first < dst[i].first) {
			rational v = f * src[j].second;
			if (v != 0) out.emplace_back(src[j].first, v);
			++j;
		} else {
			rational v = dst[i].second + f * src[j].second;
			if (v != 0) out.emplace_back(dst[i].first, v);
			++i;
			++j;
		}
	}
	dst = std::move(out);
}

}  // namespace

std::vector<persistence_pair> reduce(const filtration& f) {
	const std::vector<filtration_entry> order = f.entries_sorted();
	const std::size_t n = order.size();
	std::map<simplex, std::size_t> pos;
	for (std::size_t i = 0; i < n; ++i) pos.emplace(order[i].s, i);

	std::vector<column> r(n), v(n);
	std::vector<std::size_t> owner(n, filtration::npos);  // low row -> column owning it
	std::vector<bool> is_cycle(n, false);

	for (std::size_t j = 0; j < n; ++j) {
		for (const auto& [face, sign] : boundary_faces(order[j].s))
			r[j].emplace_back(pos.at(face), rational(sign));
		std::sort(r[j].begin(), r[j].end());
		v[j].emplace_back(j, rational(1));
		while (!r[j].empty()) {
			std::size_t low = r[j].back().first;
			std::size_t k = owner[low];
			if (k == filtration::npos) break;
			rational fscale = -r[j].back().second / r[k].back().second;
			col_axpy(r[j], fscale, r[k]);
			col_axpy(v[j], fscale, v[k]);
		}
		if (r[j].empty())
			is_cycle[j] = true;
		else
			owner[r[j].back().first] = j;
	}

	std::vector<persistence_pair> out;
	std::vector<bool> killed(n, false);
	for (std::size_t j = 0; j < n; ++j) {
		if (r[j].empty()) continue;
		std::size_t i = r[j].back().first;  // creator paired with killer j
		killed[i] = true;
		if (order[i].t == order[j].t) continue;  // zero length
		persistence_pair pp;
		pp.p = order[i].s.dim();
		pp.birth = order[i].t;
		pp.death = time_value(order[j].t);
		pp.representative = chain(pp.p);
		for (const auto& [row, coef] : r[j]) pp.representative.add(order[row].s, coef);
		out.push_back(std::move(pp));
	}
	for (std::size_t i = 0; i < n; ++i) {
		if (!is_cycle[i] || killed[i]) continue;
		persistence_pair pp;
		pp.p = order[i].s.dim();
		pp.birth = order[i].t;
		pp.death = time_value::infinity();
		pp.representative = chain(pp.p);
		for (const auto& [row, coef] : v[i]) pp.representative.add(order[row].s, coef);
		out.push_back(std::move(pp));
	}
	return out;
}

barcode persistence_barcode(const filtration& f, int p, bool with_representatives) {
	barcode bc;
	bc.p = p;
	for (auto& pp : reduce(f)) {
		if (pp.p != p) continue;
		bar b;
		b.p = p;
		b.birth = pp.birth;
		b.death = pp.death;
		if (with_representatives) b.representative = std::move(pp.representative);
		bc.bars.push_back(std::move(b));
	}
	bc.sort_canonical();
	return bc;
}

std::vector<std::pair<rational, std::size_t>> betti_table(const filtration& f, int p, backend bk) {
	std::vector<std::pair<rational, std::size_t>> out;
	for (const rational& t : f.critical_times()) {
		std::size_t np = f.count_at(p, t);
		std::size_t z = np - rank_of(f.boundary_matrix(p, t, bk));
		std::size_t b = rank_of(f.boundary_matrix(p + 1, t, bk));
		out.emplace_back(t, z - b);
	}
	return out;
}

std::size_t persistent_betti(const filtration& f, int p, const rational& s, const rational& t,
                             backend bk) {
	// rank of H_p(K_s) -> H_p(K_t) = dim Z_p(s) - dim(Z_p(s) ∩ B_p(t))
	exact_matrix z = kernel_basis(f.boundary_matrix(p, s, bk));
	std::size_t dim_z = z.cols();
	if (dim_z == 0) return 0;
	exact_matrix zp = pad_rows(z, f.count_at(p, t));
	exact_matrix d = f.boundary_matrix(p + 1, t, bk);
	if (d.cols() == 0) return dim_z;
	return dim_z - intersection_dim(zp, d);
}

barcode persistence_barcode_betti_oracle(const filtration& f, int p, backend bk) {
	const auto& times = f.critical_times();
	const std::size_t m = times.size();
	// beta[i][j] = persistent betti from times[i] to times[j], i <= j
	std::vector<std::vector<std::size_t>> beta(m, std::vector<std::size_t>(m, 0));
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = i; j < m; ++j) beta[i][j] = persistent_betti(f, p, times[i], times[j], bk);
	auto b = [&](std::size_t i, std::size_t j) -> long {
		// i, j are 1-based cohort indices; 0 means "before the filtration"
		if (i == 0 || j < i) return 0;
		return static_cast<long>(beta[i - 1][j - 1]);
	};
	barcode bc;
	bc.p = p;
	for (std::size_t i = 1; i <= m; ++i) {
		for (std::size_t j = i + 1; j <= m; ++j) {
			long mult = (b(i, j - 1) - b(i, j)) - (b(i - 1, j - 1) - b(i - 1, j));
			for (long k = 0; k < mult; ++k) {
				bar br;
				br.p = p;
				br.birth = times[i - 1];
				br.death = time_value(times[j - 1]);
				bc.bars.push_back(br);
			}
		}
		long inf_mult = b(i, m) - b(i - 1, m);
		for (long k = 0; k < inf_mult; ++k) {
			bar br;
			br.p = p;
			br.birth = times[i - 1];
			br.death = time_value::infinity();
			bc.bars.push_back(br);
		}
	}
	bc.sort_canonical();
	return bc;
}

}  // namespace harmonia
