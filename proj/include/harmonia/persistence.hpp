#pragma once

#include <optional>

#include "harmonia/chain.hpp"

namespace harmonia {

struct bar {
	int p = 0;
	rational birth;
	time_value death;  // death > birth; infinite when the class survives
	std::optional<chain> representative;
	// set for subordinate bars: the persistence bar this interval tiles
	std::optional<rational> parent_birth;
	std::optional<time_value> parent_death;

	rational length_or(const rational& cap) const { return death.finite ? death.q - birth : cap; }
};

struct barcode {
	int p = 0;
	std::vector<bar> bars;

	void sort_canonical();  // by (birth, death, dimension); infinite deaths last
	std::string str() const;  // "birth death" lines, death "inf" when infinite
	bool same_bars(const barcode& o) const;  // multiset equality ignoring representatives
	std::size_t alive_at(const rational& t) const;  // bars with birth <= t < death
};

// standard column reduction over the whole filtration, exact coefficients.
// pairs[i] = creator/killer entry indices into entries_sorted(); representatives:
// finite bar -> the reduced killer column (a cycle supported at birth time),
// infinite bar -> the kernel element exposed at the creator column.
struct persistence_pair {
	int p = 0;
	rational birth;
	time_value death;
	chain representative;
};

std::vector<persistence_pair> reduce(const filtration& f);

barcode persistence_barcode(const filtration& f, int p, bool with_representatives = true);

// betti numbers per critical time, computed from ranks only (no reduction)
std::vector<std::pair<rational, std::size_t>> betti_table(const filtration& f, int p,
                                                          backend bk = backend::dense);

// rank of H_p(K_s) -> H_p(K_t), computed from ranks and subspace intersections only;
// independent of reduce(), used as a cross-check oracle
std::size_t persistent_betti(const filtration& f, int p, const rational& s, const rational& t,
                             backend bk = backend::dense);

// barcode assembled from the persistent betti table by inclusion-exclusion;
// second independent path for testing persistence_barcode
barcode persistence_barcode_betti_oracle(const filtration& f, int p, backend bk = backend::dense);

}  // namespace harmonia
