#include "harmonia/chain.hpp"

#include <stdexcept>

namespace harmonia {

rational chain::coeff(const simplex& s) const {
	auto it = coeffs.find(s);
	return it == coeffs.end() ? rational(0) : it->second;
}

void chain::add(const simplex& s, const rational& v) {
	if (v == 0) return;
	auto [it, fresh] = coeffs.emplace(s, v);
	if (!fresh) {
		it->second += v;
		if (it->second == 0) coeffs.erase(it);
	}
}

chain& chain::axpy(const rational& a, const chain& x) {
	if (a == 0) return *this;
	for (const auto& [s, v] : x.coeffs) add(s, a * v);
	return *this;
}

chain chain::scaled(const rational& a) const {
	chain out(p);
	if (a == 0) return out;
	for (const auto& [s, v] : coeffs) out.coeffs.emplace(s, a * v);
	return out;
}

std::string chain::str() const {
	if (coeffs.empty()) return "0";
	std::string out;
	bool first = true;
	for (const auto& [s, v] : coeffs) {
		if (!first) out += " + ";
		out += rational_str(v) + "*[" + s.str() + "]";
		first = false;
	}
	return out;
}

chain boundary(const simplex& s) {
	chain out(s.dim() - 1);
	for (const auto& [face, sign] : boundary_faces(s)) out.add(face, rational(sign));
	return out;
}

chain boundary(const chain& c) {
	chain out(c.p - 1);
	for (const auto& [s, v] : c.coeffs)
		for (const auto& [face, sign] : boundary_faces(s)) out.add(face, v * sign);
	return out;
}

rational inner(const chain& a, const chain& b) {
	rational acc = 0;
	const auto& small = a.coeffs.size() <= b.coeffs.size() ? a : b;
	const auto& big = a.coeffs.size() <= b.coeffs.size() ? b : a;
	for (const auto& [s, v] : small.coeffs) {
		auto it = big.coeffs.find(s);
		if (it != big.coeffs.end()) acc += v * it->second;
	}
	return acc;
}

rational norm_sq(const chain& a) { return inner(a, a); }

std::optional<rational> support_time(const filtration& f, const chain& c) {
	std::optional<rational> latest;
	for (const auto& [s, v] : c.coeffs) {
		(void)v;
		auto t = f.time_of(s);
		if (!t) return std::nullopt;
		if (!latest || *t > *latest) latest = *t;
	}
	return latest;
}

std::vector<rational> chain_to_vector(const filtration& f, const chain& c, const rational& t) {
	std::vector<rational> v(f.count_at(c.p, t), rational(0));
	for (const auto& [s, val] : c.coeffs) {
		std::size_t i = f.index_of(s);
		if (i == filtration::npos || i >= v.size())
			throw std::invalid_argument("chain_to_vector: simplex not present at t: " + s.str());
		v[i] = val;
	}
	return v;
}

chain vector_to_chain(const filtration& f, int p, const rational& t, const std::vector<rational>& v) {
	chain c(p);
	const auto& cols = f.simplices(p);
	if (v.size() > cols.size() || v.size() != f.count_at(p, t))
		throw std::invalid_argument("vector_to_chain: size mismatch");
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0) c.coeffs.emplace(cols[i].s, v[i]);
	return c;
}

}  // namespace harmonia
