#include <omp.h>

#include "harmonia/harmonic.hpp"

namespace harmonia {

// parallel kernel: harmonic bases per critical time are independent, and so are
// the rows of the rank table (fixed i, varying j); each row is filled by one task.
// within a row, r[i][j] is non-increasing in j, so computation stops at zero.
rank_table_t rank_table(const filtration& f, int p, backend bk, isect_method method) {
	rank_table_t rt;
	rt.p = p;
	rt.times = f.critical_times();
	const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(rt.times.size());
	rt.h.assign(m, 0);
	rt.r.assign(m, {});

	std::vector<exact_matrix> bases(m);
#pragma omp parallel for schedule(dynamic)
	for (std::ptrdiff_t i = 0; i < m; ++i)
		bases[i] = harmonic_basis(f, p, rt.times[i], bk).basis;
	for (std::ptrdiff_t i = 0; i < m; ++i) rt.h[i] = bases[i].cols();

#pragma omp parallel for schedule(dynamic)
	for (std::ptrdiff_t i = 0; i < m; ++i) {
		auto& row = rt.r[i];
		row.assign(m, 0);
		row[i] = rt.h[i];
		std::size_t prev = rt.h[i];
		for (std::ptrdiff_t j = i + 1; j < m; ++j) {
			if (prev == 0) break;
			if (rt.h[j] == 0) {
				prev = 0;
				continue;
			}
			exact_matrix padded = pad_rows(bases[i], f.count_at(p, rt.times[j]));
			row[j] = intersection_dim(padded, bases[j], method);
			prev = row[j];
		}
	}
	return rt;
}

// plain reference implementation: no pragmas, no early termination; kept to
// pin down the parallel kernel in tests and in the benchmark
rank_table_t rank_table_serial(const filtration& f, int p, backend bk, isect_method method) {
	rank_table_t rt;
	rt.p = p;
	rt.times = f.critical_times();
	const std::size_t m = rt.times.size();
	rt.h.assign(m, 0);
	rt.r.assign(m, std::vector<std::size_t>(m, 0));

	std::vector<exact_matrix> bases(m);
	for (std::size_t i = 0; i < m; ++i) {
		bases[i] = harmonic_basis(f, p, rt.times[i], bk).basis;
		rt.h[i] = bases[i].cols();
	}
	for (std::size_t i = 0; i < m; ++i) {
		rt.r[i][i] = rt.h[i];
		for (std::size_t j = i + 1; j < m; ++j) {
			if (rt.h[i] == 0 || rt.h[j] == 0) continue;
			exact_matrix padded = pad_rows(bases[i], f.count_at(p, rt.times[j]));
			rt.r[i][j] = intersection_dim(padded, bases[j], method);
		}
	}
	return rt;
}

}  // namespace harmonia
