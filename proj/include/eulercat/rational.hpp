#pragma once

// Exact rational scalar. Every computation in this library is carried out
// over Q; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercat {

// Arbitrary-precision exact fraction. GMP keeps values canonical
// (denominator > 0, gcd(|num|, den) = 1) through arithmetic; raw
// numerator/denominator construction must go through make_rat.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
    }
    r.canonicalize();
    return r;
}

/// Render as "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string join_rats(const std::vector<Rat>& v, const char* open, const char* close) {
    std::string out = open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    out += close;
    return out;
}

/// "(a, b, c)" — weightings and solution vectors render this way.
inline std::string vec_str(const std::vector<Rat>& v) { return join_rats(v, "(", ")"); }

/// "[a, b, c]" — coefficient lists render this way.
inline std::string list_str(const std::vector<Rat>& v) { return join_rats(v, "[", "]"); }

}  // namespace eulercat
