#include "harmonia/rational.hpp"

#include <cctype>

namespace harmonia {

namespace {

bool all_digits(const std::string& s) {
	if (s.empty()) return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c))) return false;
	return true;
}

}  // namespace

rational parse_rational(const std::string& raw) {
	std::string s = raw;
	// strip surrounding whitespace
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
	if (s.empty()) throw bad_rational("empty rational literal");

	bool neg = false;
	if (s[0] == '+' || s[0] == '-') {
		neg = (s[0] == '-');
		s.erase(s.begin());
	}
	if (s.empty()) throw bad_rational("sign with no digits: '" + raw + "'");

	rational value;
	auto slash = s.find('/');
	auto dot = s.find('.');
	if (slash != std::string::npos) {
		std::string num = s.substr(0, slash), den = s.substr(slash + 1);
		if (!all_digits(num) || !all_digits(den)) throw bad_rational("not a rational: '" + raw + "'");
		mpz_class n(num, 10), d(den, 10);
		if (d == 0) throw bad_rational("zero denominator: '" + raw + "'");
		value = rational(n, d);
		value.canonicalize();
	} else if (dot != std::string::npos) {
		std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
		if (ip.empty() && fp.empty()) throw bad_rational("not a rational: '" + raw + "'");
		if (!ip.empty() && !all_digits(ip)) throw bad_rational("not a rational: '" + raw + "'");
		if (!fp.empty() && !all_digits(fp)) throw bad_rational("not a rational: '" + raw + "'");
		mpz_class n(ip.empty() ? std::string("0") : ip, 10);
		mpz_class den = 1;
		for (char c : fp) {
			n = n * 10 + (c - '0');
			den *= 10;
		}
		value = rational(n, den);
		value.canonicalize();
	} else {
		if (!all_digits(s)) throw bad_rational("not a rational: '" + raw + "'");
		value = rational(mpz_class(s, 10));
	}
	if (neg) value = -value;
	return value;
}

std::string rational_str(const rational& q) { return q.get_str(); }

double rational_double(const rational& q) { return q.get_d(); }

std::string time_str(const time_value& t) { return t.finite ? rational_str(t.q) : "inf"; }

}  // namespace harmonia
