#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sspc {

// All numeric work in this library is exact. mpq_class keeps values in
// canonical form (reduced, denominator > 0) as long as arithmetic goes
// through its operators, which is everything we do.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; canonicalizes, so "2/4" parses as 1/2.
inline Rational parse_rational(std::string_view tok) {
    std::string s(tok);
    if (s.empty()) throw ParseError("empty rational token");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("bad rational token: '" + s + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// "p/q" with q > 1, plain "p" for integers. Matches get_str(), spelled out
// here so the text format does not silently follow a gmp behavior change.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign_of(const Rational& r) { return sgn(r); }

}  // namespace sspc
