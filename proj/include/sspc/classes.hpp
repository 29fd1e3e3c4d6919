#pragma once

#include <optional>
#include <string>
#include <variant>

#include "sspc/matrix.hpp"
#include "sspc/partial_matrix.hpp"

namespace sspc {

// The P-matrix family and its sign symmetric refinements. "Sign symmetric"
// means a_ij * a_ji > 0 or a_ij = a_ji = 0 for every pair. The *plus
// classes strengthen P0 by requiring, in every order k, at least one
// positive k x k principal minor; the *01* classes additionally require a
// positive diagonal pointwise.
enum class MatrixClass {
    p,          // all principal minors positive
    p0,         // all principal minors nonnegative
    p0plus,     // P0 and a positive minor in every order
    p01plus,    // p0plus with positive diagonal
    ssp,        // sign symmetric P
    ssp0,       // sign symmetric P0
    ssp01,      // sign symmetric P0 with positive diagonal
    ssp0plus,   // sign symmetric p0plus
    ssp01plus,  // sign symmetric p01plus
};

const char* to_string(MatrixClass c);
MatrixClass parse_class(const std::string& name);  // throws ParseError

bool requires_sign_symmetry(MatrixClass c);
// Pointwise positive-diagonal requirement (not the one induced by 1x1 minors).
bool requires_positive_diagonal(MatrixClass c);
// Classes whose membership demands a positive minor in every order; for
// k = n that is the determinant itself, which is what makes a vanishing
// symbolic determinant a proof of non-completability.
bool requires_positive_minor_per_order(MatrixClass c);
// P and ssP: every principal minor strictly positive.
bool requires_all_minors_positive(MatrixClass c);

// Failure evidence for a membership check. Exactly one is set on failure.
struct MinorViolation {
    IndexSet set;
    Rational value;
    bool strict = false;  // true when the class needed > 0, not >= 0
};
struct NoPositiveMinor {
    int order = 0;
};
struct NonPositiveDiagonal {
    int index = 0;
    Rational value;
};
struct TwinViolation {
    int i = 0, j = 0;
    Rational a_ij, a_ji;
};
// Only produced by verify_completion: the candidate changed a specified cell.
struct CellDisagreement {
    int i = 0, j = 0;
    Rational specified, got;
};

struct MembershipVerdict {
    bool member = false;
    std::variant<std::monostate, MinorViolation, NoPositiveMinor, NonPositiveDiagonal,
                 TwinViolation, CellDisagreement>
        witness;
    std::string describe() const;  // human-readable, 1-based
};

MembershipVerdict is_member(const ExactMatrix& m, MatrixClass c);
// Same verdict computed from a precomputed profile (used where many classes
// are evaluated against one matrix).
MembershipVerdict is_member(const ExactMatrix& m, MatrixClass c, const MinorProfile& profile);

// The structural case a partial membership check landed in: at least one
// diagonal entry unspecified / all diagonal specified but off-diagonal holes
// remain / no holes at all. The three are mutually exclusive and exhaustive.
enum class PartialCase {
    some_diagonal_unspecified,
    diagonal_specified_incomplete,
    fully_specified,
};

struct PartialVerdict {
    bool member = false;
    PartialCase pcase = PartialCase::fully_specified;
    std::string reason;  // empty when member
};

// Partial membership for the sign symmetric P01+ class: the specified data
// must not already rule out membership. Concretely: fully specified twin
// pairs sign symmetric; every fully specified principal minor nonnegative;
// when all diagonal entries are specified they must be positive; a matrix
// with no holes must simply be a member.
PartialVerdict is_partial_member(const PartialMatrix& p);

// Same idea for any class: twin condition iff the class is sign symmetric,
// fully specified principal minors > 0 for P/ssP and >= 0 otherwise, the
// pointwise diagonal condition only when every diagonal entry is specified.
PartialVerdict is_partial_member_for(const PartialMatrix& p, MatrixClass c);

// Checks that m agrees with p on every specified cell and that m is a member
// of c. Orders must match (std::invalid_argument otherwise).
MembershipVerdict verify_completion(const PartialMatrix& p, const ExactMatrix& m, MatrixClass c);

}  // namespace sspc
