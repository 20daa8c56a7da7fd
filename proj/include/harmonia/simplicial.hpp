#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harmonia/exact_matrix.hpp"
#include "harmonia/rational.hpp"

namespace harmonia {

// abstract simplex; vertices kept strictly increasing
struct simplex {
	std::vector<int> v;

	simplex() = default;
	simplex(std::initializer_list<int> verts) : v(verts) {}
	explicit simplex(std::vector<int> verts) : v(std::move(verts)) {}

	int dim() const { return static_cast<int>(v.size()) - 1; }
	bool operator==(const simplex& o) const { return v == o.v; }
	bool operator!=(const simplex& o) const { return v != o.v; }
	bool operator<(const simplex& o) const { return v < o.v; }  // lexicographic
	std::string str() const;
};

// faces of s with the alternating sign (-1)^i of the removed vertex position
std::vector<std::pair<simplex, int>> boundary_faces(const simplex& s);

struct filtration_entry {
	rational t;
	simplex s;
};

struct filtration_error : std::runtime_error {
	enum class kind { malformed_line, non_rational_time, duplicate_simplex, closure_violation, empty_input };
	kind what_kind;
	int line;  // 1-based input line when applicable, else 0
	filtration_error(kind k, int ln, const std::string& msg)
	    : std::runtime_error(msg), what_kind(k), line(ln) {}
};

// a simplicial filtration: simplices with monotone insertion times.
// within each dimension, simplices are kept in (time, lex) order, so the
// boundary matrix at any time t is a leading submatrix of the final one.
class filtration {
       public:
	static filtration from_entries(std::vector<filtration_entry> entries);
	// text:  "<time> <v0> <v1> ... <vk>" per line, '#' comments and blank lines ignored
	// json:  {"simplices":[{"t":"3/2","v":[0,1]}, ...]}
	static filtration parse(const std::string& content);
	static filtration parse_text(const std::string& content);
	static filtration parse_json(const std::string& content);

	int max_dim() const { return static_cast<int>(by_dim.size()) - 1; }
	std::size_t size() const { return total; }
	const std::vector<rational>& critical_times() const { return crit; }

	// all p-simplices in (time, lex) column order
	const std::vector<filtration_entry>& simplices(int p) const;
	// number of p-simplices with time <= t
	std::size_t count_at(int p, const rational& t) const;
	// the p-simplices present at time t, in column order
	std::vector<simplex> simplices_at(int p, const rational& t) const;

	std::optional<rational> time_of(const simplex& s) const;
	// column index of s among p-simplices, npos when absent
	std::size_t index_of(const simplex& s) const;

	// boundary operator ∂_p restricted to K_t: rows = (p-1)-simplices at t, cols = p-simplices at t
	exact_matrix boundary_matrix(int p, const rational& t, backend bk = backend::dense) const;
	// coboundary δ^p at t = transpose of ∂_{p+1} at t
	exact_matrix coboundary_matrix(int p, const rational& t, backend bk = backend::dense) const;

	// all entries in global (time, dim, lex) order — a valid one-pass insertion order
	std::vector<filtration_entry> entries_sorted() const;
	// canonical text serialization (entries_sorted order)
	std::string to_text() const;

	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

       private:
	std::vector<std::vector<filtration_entry>> by_dim;  // per dimension, (time, lex) sorted
	std::map<simplex, std::pair<int, std::size_t>> index;  // simplex -> (dim, position)
	std::vector<rational> crit;
	std::size_t total = 0;
};

}  // namespace harmonia
