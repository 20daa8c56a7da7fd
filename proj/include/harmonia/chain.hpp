#pragma once

#include <map>

#include "harmonia/rational.hpp"
#include "harmonia/simplicial.hpp"

namespace harmonia {

// exact p-chain; zero coefficients are never stored
struct chain {
	int p = 0;
	std::map<simplex, rational> coeffs;

	chain() = default;
	explicit chain(int dim) : p(dim) {}

	bool zero() const { return coeffs.empty(); }
	rational coeff(const simplex& s) const;
	void add(const simplex& s, const rational& v);
	chain& axpy(const rational& a, const chain& x);  // *this += a * x
	chain scaled(const rational& a) const;
	bool operator==(const chain& o) const { return p == o.p && coeffs == o.coeffs; }
	std::string str() const;
};

chain boundary(const simplex& s);
chain boundary(const chain& c);
// inner product in the orthonormal simplex basis
rational inner(const chain& a, const chain& b);
rational norm_sq(const chain& a);

// latest insertion time over the support; nullopt if some simplex is absent
std::optional<rational> support_time(const filtration& f, const chain& c);

// chain as a coordinate vector over the p-simplices present at time t
std::vector<rational> chain_to_vector(const filtration& f, const chain& c, const rational& t);
chain vector_to_chain(const filtration& f, int p, const rational& t, const std::vector<rational>& v);

}  // namespace harmonia
