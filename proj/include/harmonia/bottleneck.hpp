#pragma once

#include <cstddef>
#include <vector>

#include "harmonia/persistence.hpp"

namespace harmonia {

// one matched pair of bars, as indices into the two input barcodes
struct matching_edge {
	std::size_t left = 0;
	std::size_t right = 0;
};

struct bottleneck_result {
	time_value distance;  // infinite when the essential-bar counts differ
	std::vector<matching_edge> pairs;
	std::vector<std::size_t> left_to_diagonal;
	std::vector<std::size_t> right_to_diagonal;
};

// exact bottleneck distance between two barcodes of the same dimension.
// candidate distances are enumerated exactly (pairwise costs and half-lengths)
// and scanned in ascending order; feasibility at each candidate is decided by
// maximum bipartite matching on the diagonal-augmented graph.
bottleneck_result bottleneck_distance(const barcode& a, const barcode& b);

// exhaustive matching search, for small inputs only (<= 6 finite bars and
// <= 6 essential bars per side); used to pin the matching-based solver
time_value bottleneck_bruteforce(const barcode& a, const barcode& b);

}  // namespace harmonia
