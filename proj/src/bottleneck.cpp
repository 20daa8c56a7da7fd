#include "harmonia/bottleneck.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace harmonia {

namespace {

struct finite_bar_view {
	rational birth;
	rational death;
	std::size_t orig;
	rational half_length() const { return (death - birth) / 2; }
};

rational pair_cost(const finite_bar_view& x, const finite_bar_view& y) {
	rational db = abs(x.birth - y.birth);
	rational dd = abs(x.death - y.death);
	return db > dd ? db : dd;
}

// hopcroft-karp on an explicit bipartite adjacency list
struct bipartite_matcher {
	std::size_t nl, nr;
	std::vector<std::vector<std::size_t>> adj;
	std::vector<std::ptrdiff_t> ml, mr;
	std::vector<std::size_t> dist;
	static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

	explicit bipartite_matcher(std::size_t left, std::size_t right)
	    : nl(left), nr(right), adj(left), ml(left, -1), mr(right, -1), dist(left) {}

	bool bfs() {
		std::queue<std::size_t> q;
		bool found = false;
		for (std::size_t u = 0; u < nl; ++u) {
			if (ml[u] < 0) {
				dist[u] = 0;
				q.push(u);
			} else {
				dist[u] = unreachable;
			}
		}
		while (!q.empty()) {
			std::size_t u = q.front();
			q.pop();
			for (std::size_t v : adj[u]) {
				std::ptrdiff_t w = mr[v];
				if (w < 0) {
					found = true;
				} else if (dist[static_cast<std::size_t>(w)] == unreachable) {
					dist[static_cast<std::size_t>(w)] = dist[u] + 1;
					q.push(static_cast<std::size_t>(w));
				}
			}
		}
		return found;
	}

	bool dfs(std::size_t u) {
		for (std::size_t v : adj[u]) {
			std::ptrdiff_t w = mr[v];
			if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
				ml[u] = static_cast<std::ptrdiff_t>(v);
				mr[v] = static_cast<std::ptrdiff_t>(u);
				return true;
			}
		}
		dist[u] = unreachable;
		return false;
	}

	std::size_t run() {
		std::size_t matched = 0;
		while (bfs())
			for (std::size_t u = 0; u < nl; ++u)
				if (ml[u] < 0 && dfs(u)) ++matched;
		return matched;
	}
};

// augmented graph at threshold eps.
// left: 0..na-1 real bars of a, then na..na+nb-1 diagonal copies of b's bars.
// right: 0..nb-1 real bars of b, then nb..nb+na-1 diagonal copies of a's bars.
bipartite_matcher build_matcher(const std::vector<finite_bar_view>& a, const std::vector<finite_bar_view>& b,
                                const rational& eps) {
	const std::size_t na = a.size(), nb = b.size();
	bipartite_matcher m(na + nb, nb + na);
	for (std::size_t i = 0; i < na; ++i) {
		for (std::size_t j = 0; j < nb; ++j)
			if (pair_cost(a[i], b[j]) <= eps) m.adj[i].push_back(j);
		if (a[i].half_length() <= eps) m.adj[i].push_back(nb + i);
	}
	for (std::size_t j = 0; j < nb; ++j) {
		std::size_t u = na + j;
		if (b[j].half_length() <= eps) m.adj[u].push_back(j);
		for (std::size_t i = 0; i < na; ++i) m.adj[u].push_back(nb + i);
	}
	return m;
}

bool feasible(const std::vector<finite_bar_view>& a, const std::vector<finite_bar_view>& b, const rational& eps) {
	bipartite_matcher m = build_matcher(a, b, eps);
	return m.run() == a.size() + b.size();
}

void split_bars(const barcode& bc, std::vector<finite_bar_view>& fin, std::vector<std::size_t>& ess) {
	for (std::size_t i = 0; i < bc.bars.size(); ++i) {
		const bar& x = bc.bars[i];
		if (x.death.finite)
			fin.push_back({x.birth, x.death.q, i});
		else
			ess.push_back(i);
	}
}

}  // namespace

bottleneck_result bottleneck_distance(const barcode& a, const barcode& b) {
	if (a.p != b.p) throw std::invalid_argument("bottleneck_distance: dimension mismatch");

	std::vector<finite_bar_view> fa, fb;
	std::vector<std::size_t> ea, eb;
	split_bars(a, fa, ea);
	split_bars(b, fb, eb);

	bottleneck_result res;
	if (ea.size() != eb.size()) {
		res.distance = time_value::infinity();
		return res;
	}

	// essential bars must match among themselves; for the sup metric on the
	// line the sorted-by-birth pairing is optimal
	auto by_birth = [](const barcode& bc) {
		return [&bc](std::size_t i, std::size_t j) { return bc.bars[i].birth < bc.bars[j].birth; };
	};
	std::sort(ea.begin(), ea.end(), by_birth(a));
	std::sort(eb.begin(), eb.end(), by_birth(b));
	rational essential_cost = 0;
	for (std::size_t k = 0; k < ea.size(); ++k) {
		rational c = abs(a.bars[ea[k]].birth - b.bars[eb[k]].birth);
		if (c > essential_cost) essential_cost = c;
		res.pairs.push_back({ea[k], eb[k]});
	}

	// exact candidate thresholds for the finite part
	std::vector<rational> cand;
	cand.push_back(0);
	for (const auto& x : fa) cand.push_back(x.half_length());
	for (const auto& y : fb) cand.push_back(y.half_length());
	for (const auto& x : fa)
		for (const auto& y : fb) cand.push_back(pair_cost(x, y));
	std::sort(cand.begin(), cand.end());
	cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

	rational finite_eps = 0;
	for (const rational& eps : cand) {
		if (feasible(fa, fb, eps)) {
			finite_eps = eps;
			break;
		}
	}

	rational d = finite_eps > essential_cost ? finite_eps : essential_cost;
	res.distance = time_value(d);

	// extract a witness matching at the final threshold
	bipartite_matcher m = build_matcher(fa, fb, finite_eps);
	std::size_t matched = m.run();
	if (matched != fa.size() + fb.size())
		throw std::logic_error("bottleneck_distance: infeasible at selected threshold");
	for (std::size_t i = 0; i < fa.size(); ++i) {
		std::size_t v = static_cast<std::size_t>(m.ml[i]);
		if (v < fb.size())
			res.pairs.push_back({fa[i].orig, fb[v].orig});
		else
			res.left_to_diagonal.push_back(fa[i].orig);
	}
	for (std::size_t j = 0; j < fb.size(); ++j)
		if (m.mr[j] >= static_cast<std::ptrdiff_t>(fa.size())) res.right_to_diagonal.push_back(fb[j].orig);
	return res;
}

namespace {

// recursive exhaustive search over all matchings of the finite parts
void bf_rec(const std::vector<finite_bar_view>& a, const std::vector<finite_bar_view>& b, std::size_t i,
            std::vector<bool>& used, const rational& acc, rational& best, bool& best_set) {
	if (best_set && acc >= best) return;
	if (i == a.size()) {
		rational total = acc;
		for (std::size_t j = 0; j < b.size(); ++j)
			if (!used[j] && b[j].half_length() > total) total = b[j].half_length();
		if (!best_set || total < best) {
			best = total;
			best_set = true;
		}
		return;
	}
	{
		rational acc2 = acc;
		if (a[i].half_length() > acc2) acc2 = a[i].half_length();
		bf_rec(a, b, i + 1, used, acc2, best, best_set);
	}
	for (std::size_t j = 0; j < b.size(); ++j) {
		if (used[j]) continue;
		rational c = pair_cost(a[i], b[j]);
		rational acc2 = acc > c ? acc : c;
		used[j] = true;
		bf_rec(a, b, i + 1, used, acc2, best, best_set);
		used[j] = false;
	}
}

}  // namespace

time_value bottleneck_bruteforce(const barcode& a, const barcode& b) {
	if (a.p != b.p) throw std::invalid_argument("bottleneck_bruteforce: dimension mismatch");
	std::vector<finite_bar_view> fa, fb;
	std::vector<std::size_t> ea, eb;
	split_bars(a, fa, ea);
	split_bars(b, fb, eb);
	if (ea.size() != eb.size()) return time_value::infinity();
	if (fa.size() > 6 || fb.size() > 6 || ea.size() > 6)
		throw std::invalid_argument("bottleneck_bruteforce: input too large");

	// essential part: try every bijection
	rational ess_best = 0;
	bool ess_set = ea.empty();
	std::vector<std::size_t> perm(eb.size());
	for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
	if (!ea.empty()) {
		do {
			rational worst = 0;
			for (std::size_t k = 0; k < ea.size(); ++k) {
				rational c = abs(a.bars[ea[k]].birth - b.bars[eb[perm[k]]].birth);
				if (c > worst) worst = c;
			}
			if (!ess_set || worst < ess_best) {
				ess_best = worst;
				ess_set = true;
			}
		} while (std::next_permutation(perm.begin(), perm.end()));
	}

	rational fin_best = 0;
	bool fin_set = false;
	std::vector<bool> used(fb.size(), false);
	bf_rec(fa, fb, 0, used, rational(0), fin_best, fin_set);

	rational d = fin_best > ess_best ? fin_best : ess_best;
	return time_value(d);
}

}  // namespace harmonia
