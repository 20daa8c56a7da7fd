// compares the parallel rank-table kernel against the serial reference and the
// dense backend against the sparse one, on a random filtration; verifies that
// every variant computes the same table

#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "harmonia/harness.hpp"
#include "harmonia/harmonic.hpp"

using namespace harmonia;

namespace {

struct timing {
	rank_table_t table;
	double seconds = 0;
};

template <typename Fn>
timing timed(Fn&& fn) {
	timing t;
	double t0 = omp_get_wtime();
	t.table = fn();
	t.seconds = omp_get_wtime() - t0;
	return t;
}

}  // namespace

int main(int argc, char** argv) {
	std::uint64_t seed = 20260814;
	int max_vertices = 12;
	int dim = 1;
	if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
	if (argc > 2) max_vertices = std::atoi(argv[2]);
	if (argc > 3) dim = std::atoi(argv[3]);

	if (const char* tv = std::getenv("HARMONIA_THREADS")) {
		int n = std::atoi(tv);
		if (n > 0) omp_set_num_threads(n);
	}

	filtration f = random_filtration(seed, max_vertices, 2, 45);
	std::cout << "simplices " << f.size() << ", critical times " << f.critical_times().size() << ", dimension "
	          << dim << ", omp max threads " << omp_get_max_threads() << "\n";

	timing serial_dense = timed([&] { return rank_table_serial(f, dim, backend::dense, isect_method::ranks); });
	timing parallel_dense = timed([&] { return rank_table(f, dim, backend::dense, isect_method::ranks); });
	timing serial_sparse = timed([&] { return rank_table_serial(f, dim, backend::sparse, isect_method::ranks); });
	timing parallel_sparse = timed([&] { return rank_table(f, dim, backend::sparse, isect_method::ranks); });

	std::cout << "serial   dense  " << serial_dense.seconds << " s\n";
	std::cout << "parallel dense  " << parallel_dense.seconds << " s\n";
	std::cout << "serial   sparse " << serial_sparse.seconds << " s\n";
	std::cout << "parallel sparse " << parallel_sparse.seconds << " s\n";

	const bool same = serial_dense.table.r == parallel_dense.table.r &&
	                  serial_dense.table.r == serial_sparse.table.r &&
	                  serial_dense.table.r == parallel_sparse.table.r &&
	                  serial_dense.table.h == parallel_dense.table.h;
	std::cout << (same ? "all variants agree\n" : "VARIANTS DISAGREE\n");
	return same ? 0 : 1;
}
