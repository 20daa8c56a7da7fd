#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/chain.hpp"
#include "harmonia/harness.hpp"
#include "harmonia/persistence.hpp"

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

// is c a cycle of f at its support time?
bool is_cycle(const chain& c) { return boundary(c).zero(); }

// does rep lie in the boundary space B_p(K_t)?
bool in_boundaries(const filtration& f, const chain& rep, const rational& t) {
	if (rep.p + 1 > f.max_dim()) return false;
	exact_matrix d = f.boundary_matrix(rep.p + 1, t);
	if (d.cols() == 0) return false;
	std::vector<rational> v = chain_to_vector(f, rep, t);
	exact_matrix vm(v.size(), 1);
	for (std::size_t r = 0; r < v.size(); ++r) vm.set(r, 0, v[r]);
	return rank_of(d) == rank_of(hstack(d, vm));
}

}  // namespace

TEST_CASE("filled triangle: one loop living from the edges to the triangle") {
	filtration f = filled_triangle_filtration();
	barcode h1 = persistence_barcode(f, 1);
	CHECK(h1.same_bars(make_bars(1, {{rational(1), fin(2)}})));
	REQUIRE(h1.bars.size() == 1);
	REQUIRE(h1.bars[0].representative.has_value());
	const chain& z = *h1.bars[0].representative;
	chain expected(1);
	expected.add(simplex{0, 1}, rational(1));
	expected.add(simplex{1, 2}, rational(1));
	expected.add(simplex{0, 2}, rational(-1));
	CHECK(z == expected);

	barcode h0 = persistence_barcode(f, 0);
	CHECK(h0.same_bars(make_bars(0, {{rational(0), fin(1)},
	                                 {rational(0), fin(1)},
	                                 {rational(0), time_value::infinity()}})));
}

TEST_CASE("square with diagonal: staggered deaths of the two triangles") {
	filtration f = square_two_triangles_filtration();
	barcode h1 = persistence_barcode(f, 1);
	CHECK(h1.same_bars(make_bars(1, {{rational(1), time_value(rational(3))},
	                                 {rational(2), time_value(rational(5) / 2)}})));
}

TEST_CASE("book complex: ordering of deaths follows the reduction, not the harmonic flow") {
	filtration f = book_filtration();
	barcode h1 = persistence_barcode(f, 1);
	CHECK(h1.same_bars(make_bars(1, {{rational(9), fin(19)},
	                                 {rational(11), fin(18)},
	                                 {rational(13), fin(17)},
	                                 {rational(15), fin(16)}})));

	// frozen representatives: each killer's reduced column is a plain triangle boundary
	auto rep_of = [&](long birth) -> chain {
		for (const bar& b : h1.bars)
			if (b.birth == rational(birth)) return *b.representative;
		FAIL("bar not found");
		return chain(1);
	};
	auto tri = [](int a, int b, int c) { return boundary(simplex{a, b, c}); };
	CHECK(rep_of(15) == tri(1, 3, 6));
	CHECK(rep_of(13) == tri(1, 3, 5));
	CHECK(rep_of(11) == tri(1, 3, 4));
	CHECK(rep_of(9) == tri(1, 2, 3));
}

TEST_CASE("elder rule on a path: younger components die at merges") {
	filtration f = filtration::parse("0 0\n1 1\n2 2\n3 0 1\n4 1 2\n");
	barcode h0 = persistence_barcode(f, 0);
	CHECK(h0.same_bars(make_bars(0, {{rational(0), time_value::infinity()},
	                                 {rational(1), fin(3)},
	                                 {rational(2), fin(4)}})));
}

TEST_CASE("zero-length pairs are dropped") {
	// edge and triangle arrive together: the loop closed by {0,2} at time 1 is
	// filled instantly
	filtration f = filtration::parse("0 0\n0 1\n0 2\n0 0 1\n0 1 2\n1 0 2\n1 0 1 2\n");
	barcode h1 = persistence_barcode(f, 1);
	CHECK(h1.bars.empty());
}

TEST_CASE("representative invariants on the worked fixtures") {
	for (const filtration& f : {square_two_triangles_filtration(), book_filtration(), fan_disc_filtration(4)}) {
		const auto& times = f.critical_times();
		for (int p = 0; p <= f.max_dim(); ++p) {
			barcode bc = persistence_barcode(f, p);
			for (const bar& b : bc.bars) {
				REQUIRE(b.representative.has_value());
				const chain& z = *b.representative;
				CHECK(!z.zero());
				CHECK(z.p == p);
				CHECK(is_cycle(z));
				auto st = support_time(f, z);
				REQUIRE(st.has_value());
				CHECK(*st == b.birth);  // the class is born exactly at the bar's birth
				if (b.death.finite) {
					CHECK(in_boundaries(f, z, b.death.q));  // dead at death...
					// ...but not at the last critical time before death
					auto it = std::lower_bound(times.begin(), times.end(), b.death.q);
					REQUIRE(it != times.begin());
					rational before = *(it - 1);
					if (before >= b.birth) CHECK(!in_boundaries(f, z, before));
				} else {
					CHECK(!in_boundaries(f, z, times.back()));
				}
			}
		}
	}
}

TEST_CASE("betti table matches bar counts at every critical time") {
	for (std::uint64_t seed : {11u, 22u, 33u, 44u}) {
		filtration f = random_filtration(seed, 8, 2, 60);
		for (int p = 0; p <= 2; ++p) {
			barcode bc = persistence_barcode(f, p, false);
			for (const auto& [t, betti] : betti_table(f, p)) CHECK(bc.alive_at(t) == betti);
		}
	}
}

TEST_CASE("inclusion-exclusion over persistent betti numbers reproduces the barcode") {
	for (std::uint64_t seed = 100; seed < 140; ++seed) {
		filtration f = random_filtration(seed, 7, 2, 55);
		for (int p = 0; p <= 2; ++p) {
			barcode direct = persistence_barcode(f, p, false);
			barcode oracle = persistence_barcode_betti_oracle(f, p);
			CAPTURE(seed);
			CAPTURE(p);
			CHECK(direct.same_bars(oracle));
		}
	}
}

TEST_CASE("persistent betti is monotone in both arguments the right way") {
	filtration f = book_filtration();
	// rank of H1(K_s) -> H1(K_t) for s=15: 4 classes alive at 15
	CHECK(persistent_betti(f, 1, rational(15), rational(15)) == 4);
	CHECK(persistent_betti(f, 1, rational(15), rational(16)) == 3);
	CHECK(persistent_betti(f, 1, rational(15), rational(17)) == 2);
	CHECK(persistent_betti(f, 1, rational(15), rational(18)) == 1);
	CHECK(persistent_betti(f, 1, rational(15), rational(19)) == 0);
	CHECK(persistent_betti(f, 1, rational(9), rational(15)) == 1);
}

TEST_CASE("backend choice does not change the betti oracle") {
	filtration f = random_filtration(77, 7, 2, 60);
	for (int p = 0; p <= 2; ++p) {
		barcode d = persistence_barcode_betti_oracle(f, p, backend::dense);
		barcode s = persistence_barcode_betti_oracle(f, p, backend::sparse);
		CHECK(d.same_bars(s));
	}
}
