#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sspc/rational.hpp"

namespace sspc {

// Variables that occur when a partially specified matrix is lifted to a
// symbolic one: d_i for an unspecified diagonal cell, x_ij for an
// unspecified off-diagonal cell, and a scale variable t used by scaling
// arguments. Order (d* < x* < t, then by indices) fixes the canonical
// rendering, e.g. "d1*d2 - x12*x21".
struct VarName {
    enum class Kind { diagonal, off_diagonal, scale };
    Kind kind = Kind::scale;
    int i = 0;  // 1-based; unused for scale
    int j = 0;  // only for off_diagonal

    static VarName diag(int i) { return {Kind::diagonal, i, 0}; }
    static VarName off(int i, int j) { return {Kind::off_diagonal, i, j}; }
    static VarName t() { return {Kind::scale, 0, 0}; }

    std::string text() const;  // "d3", "x13", "t" (orders stay <= 8, single digits)
    auto operator<=>(const VarName&) const = default;
};

// A monomial is the sorted list of (variable, exponent>0) pairs; the empty
// monomial is the constant term. Vector comparison gives a canonical total
// order, which std::map below turns into a canonical term order.
using Monomial = std::vector<std::pair<VarName, int>>;

// Sparse multivariate polynomial over the rationals.
class MultiPoly {
  public:
    MultiPoly() = default;

    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(const VarName& v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    int total_degree() const;         // 0 for constants and the zero poly
    int term_count() const { return static_cast<int>(terms_.size()); }
    std::set<VarName> variables() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly&) const;
    MultiPoly operator-(const MultiPoly&) const;
    MultiPoly operator*(const MultiPoly&) const;
    MultiPoly& operator+=(const MultiPoly&);
    MultiPoly& operator-=(const MultiPoly&);
    bool operator==(const MultiPoly&) const = default;

    // Every variable of the polynomial must be bound; throws
    // std::invalid_argument naming the first missing one.
    Rational evaluate(const std::map<VarName, Rational>& binding) const;

    // Canonical text: terms in canonical order with explicit signs,
    // "-x13*x31 - x13*x32", "d1*d2 - x12*x21", "2 - 3*t + t^3", "0".
    std::string text() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

// Parses the canonical rendering back (used when re-validating certificates
// embedded in reports). Accepts exactly the shape text() produces plus
// redundant whitespace.
MultiPoly parse_poly(const std::string& text);

}  // namespace sspc
