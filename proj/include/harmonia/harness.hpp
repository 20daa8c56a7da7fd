#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/harmonic.hpp"
#include "harmonia/persistence.hpp"

namespace harmonia {

// deterministic rng: mt19937_64 output is fixed by the standard, and bounded
// draws use rejection sampling, so every platform sees the same stream
struct rng64 {
	std::mt19937_64 gen;
	explicit rng64(std::uint64_t seed) : gen(seed) {}
	std::uint64_t u64() { return gen(); }
	std::uint64_t below(std::uint64_t n);               // uniform in [0, n)
	long range(long lo, long hi);                       // uniform in [lo, hi]
	bool chance(std::uint32_t num, std::uint32_t den);  // true with probability num/den
};

// worked fixtures -------------------------------------------------------------

// vertices at 0, three edges at 1, the triangle at 2
filtration filled_triangle_filtration();

// square with a diagonal; two one-dimensional classes with staggered deaths
filtration square_two_triangles_filtration();

// six vertices, nine edges, four triangles attached one by one to a shared
// edge; the running example for subordinate-bar repairs
filtration book_filtration();

// two filtrations of the same complex that differ only by swapping the entry
// times (4 and 5) of two edges; triangle times are multiplied by `scale`
std::pair<filtration, filtration> edge_swap_pair(long scale);

// wheel: k+2 vertices, all edges at time 1, the k fan triangles at 2..k+1
filtration fan_disc_filtration(int k);

// random inputs ---------------------------------------------------------------

// downward-closed random complex; each candidate simplex whose facets are all
// present is kept with probability include_pct/100, and gets a time equal to
// the max facet time plus a small (sometimes half-integer) increment
filtration random_filtration(std::uint64_t seed, int max_vertices, int max_dim, std::uint32_t include_pct);

// re-time to strictly increasing integer steps 1..n, one simplex per step,
// keeping the existing insertion order
filtration refine_to_unit_steps(const filtration& f);

// monotone simplexwise functions ----------------------------------------------

enum class value_mode { lower_star, monotone };
std::string value_mode_str(value_mode m);

// new times for the same complex: lower_star extends random vertex values by
// maximum; monotone walks faces-first adding nonnegative increments
filtration random_values(const filtration& base, std::uint64_t seed, value_mode mode);

// simplexwise perturbation by at most eps, repaired to stay monotone
filtration perturb(const filtration& f, const rational& eps, std::uint64_t seed);

// perturb vertex values by at most eps and re-extend by maximum
filtration perturb_lower_star(const filtration& f, const rational& eps, std::uint64_t seed);

// sup distance between two filtrations of the same complex
rational linf_distance(const filtration& a, const filtration& b);

// lower-star extension of the filtration's own vertex times
filtration lower_star_extension(const filtration& f);

// smallest gap between consecutive critical times; nullopt when fewer than two
std::optional<rational> min_time_gap(const filtration& f);

// stability -------------------------------------------------------------------

struct trial_report {
	std::uint64_t seed = 0;
	value_mode mode = value_mode::monotone;
	int p = 1;
	std::size_t simplex_count = 0;
	rational eps_requested = 0;
	rational eps_actual = 0;  // measured sup distance |f-g|
	time_value d_canonical;
	time_value d_persistence;
	bool pass = false;  // both distances bounded by eps_actual
};

// one perturbation trial on the given filtration (lower_star mode first
// replaces f by the extension of its vertex times, so the pair is lower-star)
trial_report stability_trial_on(const filtration& f, const rational& eps, std::uint64_t seed, int p,
                                value_mode mode);

// random complex + random values + perturbation below a quarter of the
// smallest critical gap (or exactly eps_override when given)
trial_report stability_trial(std::uint64_t seed, int max_vertices, int p, value_mode mode,
                             std::optional<rational> eps_override = std::nullopt);

// independent oracle for the canonical barcode: sweep simplices one at a time;
// births are located by a descending scan over harmonic subspaces at the
// original critical times, deaths by the oldest-hit exchange rule
barcode greedy_oracle_barcode(const filtration& f, int p, backend bk = backend::dense);

// barcode sensitivity of the swap pair as its triangle times are scaled up:
// the input sup distance stays 1 while the subordinate distance grows
struct instability_row {
	long scale = 1;
	rational input_shift = 0;
	time_value d_subordinate;
	time_value d_canonical;
	time_value d_persistence;
};
std::vector<instability_row> instability_demo(const std::vector<long>& scales = {1, 10, 100, 1000, 10000});

}  // namespace harmonia
