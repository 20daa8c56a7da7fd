#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace harmonia {

// exact rational scalar; gmp keeps values in lowest terms with positive denominator
using rational = mpq_class;

struct bad_rational : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// accepts "3", "-4", "3/2", "-3/2", "1.5", "-0.25", ".5"; rejects everything else
rational parse_rational(const std::string& s);

// "3/2", "2", "-1/3" (denominator omitted when 1)
std::string rational_str(const rational& q);

double rational_double(const rational& q);

// a filtration value: finite rational, or +infinity (used for deaths only)
struct time_value {
	bool finite = true;
	rational q = 0;

	time_value() = default;
	time_value(const rational& v) : finite(true), q(v) {}
	time_value(long v) : finite(true), q(v) {}
	static time_value infinity() {
		time_value t;
		t.finite = false;
		return t;
	}

	bool operator==(const time_value& o) const {
		if (finite != o.finite) return false;
		return !finite || q == o.q;
	}
	bool operator!=(const time_value& o) const { return !(*this == o); }
	bool operator<(const time_value& o) const {
		if (!finite) return false;
		if (!o.finite) return true;
		return q < o.q;
	}
	bool operator>(const time_value& o) const { return o < *this; }
	bool operator<=(const time_value& o) const { return !(o < *this); }
	bool operator>=(const time_value& o) const { return !(*this < o); }
};

// "3/2" or "inf"
std::string time_str(const time_value& t);

}  // namespace harmonia
