#include "harmonia/barcode_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "harmonia/chain.hpp"

namespace harmonia {

std::string fnv1a64_hex(const std::string& bytes) {
	std::uint64_t h = 14695981039346656037ULL;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 1099511628211ULL;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json chain_to_json(const chain& c) {
	ordered_json arr = ordered_json::array();
	for (const auto& [s, q] : c.coeffs) {
		ordered_json term;
		term["simplex"] = s.v;
		term["coeff"] = rational_str(q);
		arr.push_back(std::move(term));
	}
	return arr;
}

chain chain_from_json(int p, const ordered_json& arr) {
	if (!arr.is_array()) throw std::invalid_argument("representative must be an array");
	chain c(p);
	for (const auto& term : arr) {
		if (!term.is_object() || !term.contains("simplex") || !term.contains("coeff"))
			throw std::invalid_argument("representative term needs simplex and coeff");
		auto verts = term.at("simplex").get<std::vector<int>>();
		std::sort(verts.begin(), verts.end());
		if (verts.empty() || std::adjacent_find(verts.begin(), verts.end()) != verts.end())
			throw std::invalid_argument("representative simplex has repeated or missing vertices");
		c.add(simplex{std::move(verts)}, parse_rational(term.at("coeff").get<std::string>()));
	}
	return c;
}

rational rational_from_json(const ordered_json& j, const char* what) {
	if (j.is_string()) return parse_rational(j.get<std::string>());
	if (j.is_number_integer()) return rational(j.get<long>());
	throw std::invalid_argument(std::string(what) + " must be an exact rational string or integer");
}

}  // namespace

std::string barcode_document_json(const barcode& bc, const document_options& opt) {
	ordered_json doc;
	doc["schema_version"] = 1;
	doc["dimension"] = bc.p;
	doc["algorithm"] = opt.algorithm;
	ordered_json bars = ordered_json::array();
	for (const bar& b : bc.bars) {
		ordered_json jb;
		jb["birth"] = rational_str(b.birth);
		jb["death"] = b.death.finite ? ordered_json(rational_str(b.death.q)) : ordered_json(nullptr);
		if (b.parent_birth) jb["parent_birth"] = rational_str(*b.parent_birth);
		if (b.parent_death)
			jb["parent_death"] = b.parent_death->finite ? ordered_json(rational_str(b.parent_death->q))
			                                            : ordered_json(nullptr);
		if (opt.include_representatives && b.representative) jb["representative"] = chain_to_json(*b.representative);
		bars.push_back(std::move(jb));
	}
	doc["bars"] = std::move(bars);
	if (!opt.input_hash.empty()) {
		ordered_json prov;
		prov["input_hash"] = "fnv1a64:" + opt.input_hash;
		prov["tool"] = "harmonia 0.1.0";
		doc["provenance"] = std::move(prov);
	}
	return doc.dump(2) + "\n";
}

std::string barcode_document_text(const barcode& bc) {
	std::string out = "# dimension " + std::to_string(bc.p) + "\n";
	for (const bar& b : bc.bars) out += rational_str(b.birth) + " " + time_str(b.death) + "\n";
	return out;
}

barcode parse_barcode_document(const std::string& json_text) {
	ordered_json doc;
	try {
		doc = ordered_json::parse(json_text);
	} catch (const nlohmann::json::exception& e) {
		throw std::invalid_argument(std::string("barcode document is not valid json: ") + e.what());
	}
	if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("bars"))
		throw std::invalid_argument("barcode document needs dimension and bars");
	barcode bc;
	bc.p = doc.at("dimension").get<int>();
	if (!doc.at("bars").is_array()) throw std::invalid_argument("bars must be an array");
	for (const auto& jb : doc.at("bars")) {
		if (!jb.is_object() || !jb.contains("birth") || !jb.contains("death"))
			throw std::invalid_argument("each bar needs birth and death");
		bar b;
		b.p = bc.p;
		b.birth = rational_from_json(jb.at("birth"), "birth");
		if (jb.at("death").is_null())
			b.death = time_value::infinity();
		else
			b.death = time_value(rational_from_json(jb.at("death"), "death"));
		if (jb.contains("parent_birth")) b.parent_birth = rational_from_json(jb.at("parent_birth"), "parent_birth");
		if (jb.contains("parent_death")) {
			if (jb.at("parent_death").is_null())
				b.parent_death = time_value::infinity();
			else
				b.parent_death = time_value(rational_from_json(jb.at("parent_death"), "parent_death"));
		}
		if (jb.contains("representative")) b.representative = chain_from_json(bc.p, jb.at("representative"));
		bc.bars.push_back(std::move(b));
	}
	return bc;
}

namespace {

std::string xml_escape(const std::string& s) {
	std::string out;
	for (char c : s) {
		switch (c) {
			case '&': out += "&amp;"; break;
			case '<': out += "&lt;"; break;
			case '>': out += "&gt;"; break;
			case '"': out += "&quot;"; break;
			default: out += c;
		}
	}
	return out;
}

std::string fmt(double x) {
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.2f", x);
	return buf;
}

}  // namespace

std::string render_barcode_svg(const barcode& bc, const std::string& title) {
	barcode c = bc;
	c.sort_canonical();
	const std::size_t n = c.bars.size();

	double tmin = 0, tmax = 1;
	bool any = false;
	for (const bar& b : c.bars) {
		double bd = rational_double(b.birth);
		if (!any || bd < tmin) tmin = bd;
		if (!any || bd > tmax) tmax = bd;
		any = true;
		if (b.death.finite) {
			double dd = rational_double(b.death.q);
			if (dd > tmax) tmax = dd;
		}
	}
	if (tmax <= tmin) tmax = tmin + 1;

	const double left = 60, right = 840, row0 = 46, rowh = 18;
	const double height = row0 + rowh * static_cast<double>(n) + 40;
	auto xof = [&](double t) { return left + (t - tmin) / (tmax - tmin) * (right - left); };

	std::string svg;
	svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"" + fmt(height) + "\" viewBox=\"0 0 900 " +
	       fmt(height) + "\">\n";
	svg += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"" + fmt(height) + "\" fill=\"#ffffff\"/>\n";
	svg += "<text x=\"60\" y=\"24\" font-family=\"monospace\" font-size=\"14\">" + xml_escape(title) + "</text>\n";

	// axis with endpoint labels
	const double axis_y = height - 20;
	svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" + fmt(right) + "\" y2=\"" + fmt(axis_y) +
	       "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
	svg += "<text x=\"" + fmt(left) + "\" y=\"" + fmt(axis_y + 14) + "\" font-family=\"monospace\" font-size=\"11\">" +
	       fmt(tmin) + "</text>\n";
	svg += "<text x=\"" + fmt(right - 30) + "\" y=\"" + fmt(axis_y + 14) +
	       "\" font-family=\"monospace\" font-size=\"11\">" + fmt(tmax) + "</text>\n";

	for (std::size_t i = 0; i < n; ++i) {
		const bar& b = c.bars[i];
		const double y = row0 + rowh * static_cast<double>(i);
		const double x1 = xof(rational_double(b.birth));
		if (b.death.finite) {
			const double x2 = xof(rational_double(b.death.q));
			svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(x2) + "\" y2=\"" + fmt(y) +
			       "\" stroke=\"#2a6f97\" stroke-width=\"6\"/>\n";
		} else {
			svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(right) + "\" y2=\"" + fmt(y) +
			       "\" stroke=\"#c1121f\" stroke-width=\"6\"/>\n";
			svg += "<path d=\"M " + fmt(right) + " " + fmt(y - 6) + " L " + fmt(right + 10) + " " + fmt(y) + " L " +
			       fmt(right) + " " + fmt(y + 6) + " Z\" fill=\"#c1121f\"/>\n";
		}
		svg += "<text x=\"8\" y=\"" + fmt(y + 4) + "\" font-family=\"monospace\" font-size=\"10\">[" +
		       rational_str(b.birth) + "," + (b.death.finite ? rational_str(b.death.q) : "inf") + ")</text>\n";
	}
	svg += "</svg>\n";
	return svg;
}

}  // namespace harmonia
