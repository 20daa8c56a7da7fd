#include "harmonia/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace harmonia {

exact_matrix::exact_matrix(std::size_t rows, std::size_t cols, backend b) : nr(rows), nc(cols), bk(b) {
	if (bk == backend::dense)
		dense_data.assign(nr * nc, rational(0));
	else
		sparse_rows.assign(nr, {});
}

exact_matrix exact_matrix::identity(std::size_t n, backend bk) {
	exact_matrix m(n, n, bk);
	for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
	return m;
}

rational exact_matrix::at(std::size_t r, std::size_t c) const {
	if (bk == backend::dense) return dense_data[r * nc + c];
	const auto& row = sparse_rows[r];
	auto it = std::lower_bound(row.begin(), row.end(), c,
	                           [](const auto& e, std::size_t col) { return e.first < col; });
	if (it != row.end() && it->first == c) return it->second;
	return rational(0);
}

void exact_matrix::set(std::size_t r, std::size_t c, const rational& v) {
	if (bk == backend::dense) {
		dense_data[r * nc + c] = v;
		return;
	}
	auto& row = sparse_rows[r];
	auto it = std::lower_bound(row.begin(), row.end(), c,
	                           [](const auto& e, std::size_t col) { return e.first < col; });
	if (it != row.end() && it->first == c) {
		if (v == 0)
			row.erase(it);
		else
			it->second = v;
	} else if (v != 0) {
		row.insert(it, {static_cast<std::uint32_t>(c), v});
	}
}

void exact_matrix::for_each_in_row(std::size_t r,
                                   const std::function<void(std::size_t, const rational&)>& fn) const {
	if (bk == backend::dense) {
		for (std::size_t c = 0; c < nc; ++c) {
			const rational& v = dense_data[r * nc + c];
			if (v != 0) fn(c, v);
		}
	} else {
		for (const auto& [c, v] : sparse_rows[r]) fn(c, v);
	}
}

bool exact_matrix::operator==(const exact_matrix& o) const {
	if (nr != o.nr || nc != o.nc) return false;
	for (std::size_t r = 0; r < nr; ++r)
		for (std::size_t c = 0; c < nc; ++c)
			if (at(r, c) != o.at(r, c)) return false;
	return true;
}

void exact_matrix::swap_rows(std::size_t a, std::size_t b) {
	if (a == b) return;
	if (bk == backend::dense) {
		for (std::size_t c = 0; c < nc; ++c) std::swap(dense_data[a * nc + c], dense_data[b * nc + c]);
	} else {
		std::swap(sparse_rows[a], sparse_rows[b]);
	}
}

void exact_matrix::scale_row(std::size_t r, const rational& f) {
	if (bk == backend::dense) {
		for (std::size_t c = 0; c < nc; ++c)
			if (dense_data[r * nc + c] != 0) dense_data[r * nc + c] *= f;
	} else {
		if (f == 0) {
			sparse_rows[r].clear();
			return;
		}
		for (auto& [c, v] : sparse_rows[r]) v *= f;
	}
}

void exact_matrix::axpy_row(std::size_t dst, const rational& f, std::size_t src) {
	if (f == 0) return;
	if (bk == backend::dense) {
		for (std::size_t c = 0; c < nc; ++c) {
			const rational& s = dense_data[src * nc + c];
			if (s != 0) dense_data[dst * nc + c] += f * s;
		}
	} else {
		const auto& s = sparse_rows[src];
		const auto& d = sparse_rows[dst];
		std::vector<std::pair<std::uint32_t, rational>> out;
		out.reserve(d.size() + s.size());
		std::size_t i = 0, j = 0;
		while (i < d.size() || j < s.size()) {
			if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
				out.push_back(d[i++]);
			} else if (i == d.size() || s[j].first < d[i].first) {
				rational v = f * s[j].second;
				if (v != 0) out.emplace_back(s[j].first, v);
				++j;
			} else {
				rational v = d[i].second + f * s[j].second;
				if (v != 0) out.emplace_back(d[i].first, v);
				++i;
				++j;
			}
		}
		sparse_rows[dst] = std::move(out);
	}
}

std::size_t exact_matrix::pivot_row(std::size_t c, std::size_t from) const {
	for (std::size_t r = from; r < nr; ++r)
		if (at(r, c) != 0) return r;
	return npos;
}

echelon_result echelon(const exact_matrix& a) {
	echelon_result res;
	res.rref = a;
	exact_matrix& m = res.rref;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
		std::size_t p = m.pivot_row(col, row);
		if (p == exact_matrix::npos) continue;
		m.swap_rows(p, row);
		rational lead = m.at(row, col);
		if (lead != 1) m.scale_row(row, 1 / lead);
		for (std::size_t r = 0; r < m.rows(); ++r) {
			if (r == row) continue;
			rational f = m.at(r, col);
			if (f != 0) m.axpy_row(r, -f, row);
		}
		res.pivot_cols.push_back(col);
		++row;
	}
	res.rank = res.pivot_cols.size();
	return res;
}

std::size_t rank_of(const exact_matrix& a) { return echelon(a).rank; }

exact_matrix kernel_basis(const exact_matrix& a) {
	echelon_result e = echelon(a);
	std::vector<bool> is_pivot(a.cols(), false);
	for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
	std::vector<std::size_t> free_cols;
	for (std::size_t c = 0; c < a.cols(); ++c)
		if (!is_pivot[c]) free_cols.push_back(c);

	exact_matrix k(a.cols(), free_cols.size(), a.storage());
	for (std::size_t j = 0; j < free_cols.size(); ++j) {
		std::size_t f = free_cols[j];
		k.set(f, j, 1);
		for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
			rational v = e.rref.at(r, f);
			if (v != 0) k.set(e.pivot_cols[r], j, -v);
		}
	}
	return k;
}

std::optional<std::vector<rational>> solve(const exact_matrix& a, const std::vector<rational>& b) {
	if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
	exact_matrix aug(a.rows(), a.cols() + 1, a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r) {
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { aug.set(r, c, v); });
		if (b[r] != 0) aug.set(r, a.cols(), b[r]);
	}
	echelon_result e = echelon(aug);
	for (std::size_t c : e.pivot_cols)
		if (c == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
	std::vector<rational> x(a.cols(), rational(0));
	for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.rref.at(r, a.cols());
	return x;
}

exact_matrix transpose(const exact_matrix& a) {
	exact_matrix t(a.cols(), a.rows(), a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { t.set(c, r, v); });
	return t;
}

exact_matrix hstack(const exact_matrix& a, const exact_matrix& b) {
	if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
	exact_matrix m(a.rows(), a.cols() + b.cols(), a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r) {
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(r, c, v); });
		b.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(r, a.cols() + c, v); });
	}
	return m;
}

exact_matrix vstack(const exact_matrix& a, const exact_matrix& b) {
	if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
	exact_matrix m(a.rows() + b.rows(), a.cols(), a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(r, c, v); });
	for (std::size_t r = 0; r < b.rows(); ++r)
		b.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(a.rows() + r, c, v); });
	return m;
}

exact_matrix pad_rows(const exact_matrix& a, std::size_t new_rows) {
	if (new_rows < a.rows()) throw std::invalid_argument("pad_rows: shrinking not allowed");
	exact_matrix m(new_rows, a.cols(), a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(r, c, v); });
	return m;
}

exact_matrix matmul(const exact_matrix& a, const exact_matrix& b) {
	if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dim mismatch");
	exact_matrix m(a.rows(), b.cols(), a.storage());
	std::vector<rational> acc(b.cols());
	for (std::size_t r = 0; r < a.rows(); ++r) {
		std::fill(acc.begin(), acc.end(), rational(0));
		a.for_each_in_row(r, [&](std::size_t k, const rational& v) {
			b.for_each_in_row(k, [&](std::size_t c, const rational& w) { acc[c] += v * w; });
		});
		for (std::size_t c = 0; c < b.cols(); ++c)
			if (acc[c] != 0) m.set(r, c, acc[c]);
	}
	return m;
}

exact_matrix negated(const exact_matrix& a) {
	exact_matrix m(a.rows(), a.cols(), a.storage());
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) { m.set(r, c, -v); });
	return m;
}

std::vector<rational> matvec(const exact_matrix& a, const std::vector<rational>& x) {
	if (x.size() != a.cols()) throw std::invalid_argument("apply: dim mismatch");
	std::vector<rational> y(a.rows(), rational(0));
	for (std::size_t r = 0; r < a.rows(); ++r)
		a.for_each_in_row(r, [&](std::size_t c, const rational& v) {
			if (x[c] != 0) y[r] += v * x[c];
		});
	return y;
}

std::size_t intersection_dim(const exact_matrix& a, const exact_matrix& b, isect_method m) {
	if (a.rows() != b.rows()) throw std::invalid_argument("intersection_dim: row mismatch");
	if (a.cols() == 0 || b.cols() == 0) return 0;
	if (m == isect_method::ranks) {
		std::size_t ra = rank_of(a), rb = rank_of(b);
		std::size_t rab = rank_of(hstack(a, b));
		return ra + rb - rab;
	}
	// independent path: pairs (x, y) with a x = b y; the intersection is a * {x-block}
	exact_matrix k = kernel_basis(hstack(a, negated(b)));
	exact_matrix xblock(a.cols(), k.cols(), a.storage());
	for (std::size_t r = 0; r < a.cols(); ++r)
		k.for_each_in_row(r, [&](std::size_t c, const rational& v) { xblock.set(r, c, v); });
	return rank_of(matmul(a, xblock));
}

}  // namespace harmonia
