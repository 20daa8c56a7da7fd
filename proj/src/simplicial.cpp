#include "harmonia/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace harmonia {

std::string simplex::str() const {
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (i) out += ' ';
		out += std::to_string(v[i]);
	}
	return out;
}

std::vector<std::pair<simplex, int>> boundary_faces(const simplex& s) {
	std::vector<std::pair<simplex, int>> faces;
	if (s.dim() == 0) return faces;
	int sign = 1;
	for (std::size_t i = 0; i < s.v.size(); ++i) {
		simplex f;
		f.v.reserve(s.v.size() - 1);
		for (std::size_t j = 0; j < s.v.size(); ++j)
			if (j != i) f.v.push_back(s.v[j]);
		faces.emplace_back(std::move(f), sign);
		sign = -sign;
	}
	return faces;
}

filtration filtration::from_entries(std::vector<filtration_entry> entries) {
	if (entries.empty())
		throw filtration_error(filtration_error::kind::empty_input, 0, "filtration has no simplices");
	filtration f;
	int maxd = 0;
	for (const auto& e : entries) maxd = std::max(maxd, e.s.dim());
	f.by_dim.resize(maxd + 1);
	for (auto& e : entries) f.by_dim[e.s.dim()].push_back(std::move(e));
	for (auto& dimvec : f.by_dim) {
		std::sort(dimvec.begin(), dimvec.end(), [](const filtration_entry& a, const filtration_entry& b) {
			if (a.t != b.t) return a.t < b.t;
			return a.s < b.s;
		});
	}
	for (int p = 0; p <= maxd; ++p) {
		for (std::size_t i = 0; i < f.by_dim[p].size(); ++i) {
			const auto& e = f.by_dim[p][i];
			auto [it, fresh] = f.index.emplace(e.s, std::make_pair(p, i));
			if (!fresh)
				throw filtration_error(filtration_error::kind::duplicate_simplex, 0,
				                       "duplicate simplex: " + e.s.str());
			f.crit.push_back(e.t);
			++f.total;
		}
	}
	std::sort(f.crit.begin(), f.crit.end());
	f.crit.erase(std::unique(f.crit.begin(), f.crit.end()), f.crit.end());
	// closure: every facet present, no later than its coface
	for (int p = 1; p <= maxd; ++p) {
		for (const auto& e : f.by_dim[p]) {
			for (const auto& [face, sign] : boundary_faces(e.s)) {
				(void)sign;
				auto it = f.index.find(face);
				if (it == f.index.end())
					throw filtration_error(filtration_error::kind::closure_violation, 0,
					                       "missing face " + face.str() + " of " + e.s.str());
				const auto& fe = f.by_dim[it->second.first][it->second.second];
				if (fe.t > e.t)
					throw filtration_error(
					    filtration_error::kind::closure_violation, 0,
					    "face " + face.str() + " enters later than " + e.s.str());
			}
		}
	}
	return f;
}

filtration filtration::parse(const std::string& content) {
	for (char c : content) {
		if (std::isspace(static_cast<unsigned char>(c))) continue;
		return c == '{' ? parse_json(content) : parse_text(content);
	}
	throw filtration_error(filtration_error::kind::empty_input, 0, "empty input");
}

filtration filtration::parse_text(const std::string& content) {
	std::vector<filtration_entry> entries;
	std::istringstream in(content);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		auto hash = line.find('#');
		if (hash != std::string::npos) line.erase(hash);
		std::istringstream ls(line);
		std::string time_tok;
		if (!(ls >> time_tok)) continue;  // blank
		rational t;
		try {
			t = parse_rational(time_tok);
		} catch (const bad_rational& e) {
			throw filtration_error(filtration_error::kind::non_rational_time, lineno,
			                       "line " + std::to_string(lineno) + ": " + e.what());
		}
		std::vector<int> verts;
		std::string tok;
		while (ls >> tok) {
			try {
				std::size_t used = 0;
				int v = std::stoi(tok, &used);
				if (used != tok.size()) throw std::invalid_argument(tok);
				verts.push_back(v);
			} catch (const std::exception&) {
				throw filtration_error(filtration_error::kind::malformed_line, lineno,
				                       "line " + std::to_string(lineno) +
				                           ": bad vertex id '" + tok + "'");
			}
		}
		if (verts.empty())
			throw filtration_error(filtration_error::kind::malformed_line, lineno,
			                       "line " + std::to_string(lineno) + ": no vertices");
		std::sort(verts.begin(), verts.end());
		if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
			throw filtration_error(filtration_error::kind::malformed_line, lineno,
			                       "line " + std::to_string(lineno) + ": repeated vertex");
		entries.push_back({t, simplex(std::move(verts))});
	}
	return from_entries(std::move(entries));
}

filtration filtration::parse_json(const std::string& content) {
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse(content);
	} catch (const nlohmann::json::exception& e) {
		throw filtration_error(filtration_error::kind::malformed_line, 0,
		                       std::string("bad json: ") + e.what());
	}
	if (!doc.is_object() || !doc.contains("simplices") || !doc["simplices"].is_array())
		throw filtration_error(filtration_error::kind::malformed_line, 0,
		                       "json filtration needs a 'simplices' array");
	std::vector<filtration_entry> entries;
	for (const auto& item : doc["simplices"]) {
		if (!item.is_object() || !item.contains("t") || !item.contains("v") || !item["v"].is_array())
			throw filtration_error(filtration_error::kind::malformed_line, 0,
			                       "each simplex needs 't' and 'v'");
		rational t;
		const auto& tv = item["t"];
		try {
			if (tv.is_string())
				t = parse_rational(tv.get<std::string>());
			else if (tv.is_number_integer())
				t = rational(static_cast<long>(tv.get<long long>()));
			else
				throw bad_rational("time must be a string rational or an integer");
		} catch (const bad_rational& e) {
			throw filtration_error(filtration_error::kind::non_rational_time, 0, e.what());
		}
		std::vector<int> verts;
		for (const auto& x : item["v"]) {
			if (!x.is_number_integer())
				throw filtration_error(filtration_error::kind::malformed_line, 0,
				                       "vertex ids must be integers");
			verts.push_back(x.get<int>());
		}
		if (verts.empty())
			throw filtration_error(filtration_error::kind::malformed_line, 0, "empty simplex");
		std::sort(verts.begin(), verts.end());
		if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
			throw filtration_error(filtration_error::kind::malformed_line, 0, "repeated vertex");
		entries.push_back({t, simplex(std::move(verts))});
	}
	return from_entries(std::move(entries));
}

const std::vector<filtration_entry>& filtration::simplices(int p) const {
	static const std::vector<filtration_entry> none;
	if (p < 0 || p > max_dim()) return none;
	return by_dim[p];
}

std::size_t filtration::count_at(int p, const rational& t) const {
	const auto& v = simplices(p);
	std::size_t n = 0;
	while (n < v.size() && v[n].t <= t) ++n;  // (time, lex) sorted
	return n;
}

std::vector<simplex> filtration::simplices_at(int p, const rational& t) const {
	const auto& v = simplices(p);
	std::vector<simplex> out;
	for (const auto& e : v) {
		if (e.t > t) break;
		out.push_back(e.s);
	}
	return out;
}

std::optional<rational> filtration::time_of(const simplex& s) const {
	auto it = index.find(s);
	if (it == index.end()) return std::nullopt;
	return by_dim[it->second.first][it->second.second].t;
}

std::size_t filtration::index_of(const simplex& s) const {
	auto it = index.find(s);
	if (it == index.end()) return npos;
	return it->second.second;
}

exact_matrix filtration::boundary_matrix(int p, const rational& t, backend bk) const {
	std::size_t nrows = p == 0 ? 0 : count_at(p - 1, t);
	std::size_t ncols = count_at(p, t);
	exact_matrix m(nrows, ncols, bk);
	if (p == 0) return m;
	const auto& cols = simplices(p);
	for (std::size_t j = 0; j < ncols; ++j) {
		for (const auto& [face, sign] : boundary_faces(cols[j].s)) {
			std::size_t i = index_of(face);
			m.set(i, j, rational(sign));
		}
	}
	return m;
}

exact_matrix filtration::coboundary_matrix(int p, const rational& t, backend bk) const {
	return transpose(boundary_matrix(p + 1, t, bk));
}

std::vector<filtration_entry> filtration::entries_sorted() const {
	std::vector<filtration_entry> all;
	all.reserve(total);
	for (const auto& dimvec : by_dim)
		for (const auto& e : dimvec) all.push_back(e);
	std::sort(all.begin(), all.end(), [](const filtration_entry& a, const filtration_entry& b) {
		if (a.t != b.t) return a.t < b.t;
		if (a.s.dim() != b.s.dim()) return a.s.dim() < b.s.dim();
		return a.s < b.s;
	});
	return all;
}

std::string filtration::to_text() const {
	std::string out;
	for (const auto& e : entries_sorted()) {
		out += rational_str(e.t);
		out += ' ';
		out += e.s.str();
		out += '\n';
	}
	return out;
}

}  // namespace harmonia
