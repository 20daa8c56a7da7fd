#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "harmonia/bottleneck.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/harness.hpp"

using namespace harmonia;

namespace {

barcode make_bars(int p, const std::vector<std::pair<rational, time_value>>& spans) {
	barcode bc;
	bc.p = p;
	for (const auto& [b, d] : spans) {
		bar x;
		x.p = p;
		x.birth = b;
		x.death = d;
		bc.bars.push_back(x);
	}
	bc.sort_canonical();
	return bc;
}

time_value fin(long q) { return time_value(rational(q)); }
const time_value inf = time_value::infinity();

barcode random_bc(rng64& g, std::size_t max_bars) {
	barcode bc;
	bc.p = 1;
	std::size_t n = g.below(max_bars + 1);
	for (std::size_t i = 0; i < n; ++i) {
		bar x;
		x.p = 1;
		x.birth = rational(g.range(0, 16)) / 2;
		if (g.chance(1, 5))
			x.death = time_value::infinity();
		else
			x.death = time_value(x.birth + rational(g.range(1, 12)) / 2);
		bc.bars.push_back(x);
	}
	bc.sort_canonical();
	return bc;
}

// the matching must partition both sides, never mix finite with essential
// bars, and never exceed the reported distance on any edge or diagonal
void check_witness(const barcode& a, const barcode& b, const bottleneck_result& res) {
	if (!res.distance.finite) {
		CHECK(res.pairs.empty());
		CHECK(res.left_to_diagonal.empty());
		CHECK(res.right_to_diagonal.empty());
		return;
	}
	const rational& d = res.distance.q;
	std::vector<int> seen_a(a.bars.size(), 0), seen_b(b.bars.size(), 0);
	for (const matching_edge& e : res.pairs) {
		REQUIRE(e.left < a.bars.size());
		REQUIRE(e.right < b.bars.size());
		++seen_a[e.left];
		++seen_b[e.right];
		const bar& x = a.bars[e.left];
		const bar& y = b.bars[e.right];
		REQUIRE(x.death.finite == y.death.finite);
		CHECK(abs(x.birth - y.birth) <= d);
		if (x.death.finite) CHECK(abs(x.death.q - y.death.q) <= d);
	}
	for (std::size_t i : res.left_to_diagonal) {
		REQUIRE(i < a.bars.size());
		++seen_a[i];
		REQUIRE(a.bars[i].death.finite);
		CHECK((a.bars[i].death.q - a.bars[i].birth) / 2 <= d);
	}
	for (std::size_t j : res.right_to_diagonal) {
		REQUIRE(j < b.bars.size());
		++seen_b[j];
		REQUIRE(b.bars[j].death.finite);
		CHECK((b.bars[j].death.q - b.bars[j].birth) / 2 <= d);
	}
	CHECK(std::all_of(seen_a.begin(), seen_a.end(), [](int c) { return c == 1; }));
	CHECK(std::all_of(seen_b.begin(), seen_b.end(), [](int c) { return c == 1; }));
}

}  // namespace

TEST_CASE("identical barcodes are at distance zero with a full matching") {
	barcode a = canonical_barcode(book_filtration(), 1);
	barcode b = a;
	std::reverse(b.bars.begin(), b.bars.end());
	bottleneck_result res = bottleneck_distance(a, b);
	CHECK(res.distance == time_value(rational(0)));
	CHECK(res.pairs.size() == a.bars.size());
	CHECK(res.left_to_diagonal.empty());
	CHECK(res.right_to_diagonal.empty());
	check_witness(a, b, res);
}

TEST_CASE("book: ordinary and canonical barcodes sit exactly two apart") {
	filtration f = book_filtration();
	barcode pers = persistence_barcode(f, 1, false);
	barcode canon = canonical_barcode(f, 1);
	bottleneck_result res = bottleneck_distance(pers, canon);
	CHECK(res.distance == fin(2));
	check_witness(pers, canon, res);
	CHECK(bottleneck_distance(canon, pers).distance == fin(2));
}

TEST_CASE("swapped pair: subordinate distance scales, canonical stays put") {
	for (long scale : {1L, 10L}) {
		auto [left, right] = edge_swap_pair(scale);
		CHECK(bottleneck_distance(subordinate_barcode(left, 1), subordinate_barcode(right, 1))
		          .distance == time_value(rational(scale)));
		CHECK(bottleneck_distance(canonical_barcode(left, 1), canonical_barcode(right, 1))
		          .distance == fin(1));
		CHECK(bottleneck_distance(persistence_barcode(left, 1, false),
		                          persistence_barcode(right, 1, false))
		          .distance == fin(1));
	}
}

TEST_CASE("essential bars pair by sorted births") {
	CHECK(bottleneck_distance(make_bars(1, {{rational(0), inf}}), make_bars(1, {{rational(1), inf}}))
	          .distance == fin(1));
	CHECK(bottleneck_distance(make_bars(1, {{rational(0), inf}, {rational(2), inf}}),
	                          make_bars(1, {{rational(1), inf}, {rational(5), inf}}))
	          .distance == fin(3));
	// one essential and one finite bar: both contribute, the larger one decides
	CHECK(bottleneck_distance(make_bars(1, {{rational(0), inf}, {rational(0), fin(4)}}),
	                          make_bars(1, {{rational(1), inf}}))
	          .distance == fin(2));
}

TEST_CASE("mismatched essential counts put the barcodes infinitely far apart") {
	bottleneck_result res =
	    bottleneck_distance(make_bars(1, {{rational(0), inf}}), make_bars(1, {}));
	CHECK(!res.distance.finite);
	check_witness(make_bars(1, {{rational(0), inf}}), make_bars(1, {}), res);

	CHECK(!bottleneck_bruteforce(make_bars(1, {{rational(0), inf}, {rational(3), fin(5)}}),
	                             make_bars(1, {{rational(3), fin(5)}}))
	           .finite);
}

TEST_CASE("empty and nearly empty inputs") {
	CHECK(bottleneck_distance(make_bars(1, {}), make_bars(1, {})).distance == fin(0));
	// a lone finite bar can only fold onto the diagonal
	bottleneck_result res = bottleneck_distance(make_bars(1, {}), make_bars(1, {{rational(0), fin(2)}}));
	CHECK(res.distance == fin(1));
	CHECK(res.right_to_diagonal.size() == 1);
}

TEST_CASE("dimension mismatch is rejected") {
	barcode a = make_bars(0, {{rational(0), fin(1)}});
	barcode b = make_bars(1, {{rational(0), fin(1)}});
	CHECK_THROWS_AS(bottleneck_distance(a, b), std::invalid_argument);
	CHECK_THROWS_AS(bottleneck_bruteforce(a, b), std::invalid_argument);
}

TEST_CASE("matching solver agrees with exhaustive search on random pairs") {
	for (std::uint64_t seed = 0; seed < 120; ++seed) {
		rng64 g(seed * 2654435761ULL + 17);
		barcode a = random_bc(g, 5);
		barcode b = random_bc(g, 5);
		bottleneck_result res = bottleneck_distance(a, b);
		CHECK(res.distance == bottleneck_bruteforce(a, b));
		CHECK(res.distance == bottleneck_distance(b, a).distance);
		CHECK(bottleneck_distance(a, a).distance == fin(0));
		check_witness(a, b, res);

		// the exact scan can only ever return one of the enumerated thresholds
		if (res.distance.finite) {
			std::set<rational> cand = {rational(0)};
			for (const bar& x : a.bars)
				for (const bar& y : b.bars) {
					if (x.death.finite && y.death.finite) {
						rational db = abs(x.birth - y.birth), dd = abs(x.death.q - y.death.q);
						cand.insert(db > dd ? db : dd);
					}
					if (!x.death.finite && !y.death.finite) cand.insert(abs(x.birth - y.birth));
				}
			for (const bar& x : a.bars)
				if (x.death.finite) cand.insert((x.death.q - x.birth) / 2);
			for (const bar& y : b.bars)
				if (y.death.finite) cand.insert((y.death.q - y.birth) / 2);
			CHECK(cand.count(res.distance.q) == 1);
		}
	}
}
