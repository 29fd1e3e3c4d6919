#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sspc/classes.hpp"
#include "sspc/partial_matrix.hpp"
#include "sspc/poly.hpp"

namespace sspc {

// Square matrix over the polynomial ring. Usually produced by lift(): every
// hole becomes its own variable, so the symbolic determinant answers
// "what can the determinant be, over all completions" exactly.
struct SymbolicMatrix {
    int n = 0;
    std::vector<MultiPoly> entries;  // row-major

    explicit SymbolicMatrix(int order);
    const MultiPoly& at(int i, int j) const;  // 1-based
    MultiPoly& at(int i, int j);
};

// Specified cell -> constant, unspecified diagonal (i,i) -> d_i,
// unspecified off-diagonal (i,j) -> x_ij.
SymbolicMatrix lift(const PartialMatrix& p);

// First-row cofactor expansion over the polynomial ring. The expansion tree
// is n! leaves, so the order is capped at 6 (std::invalid_argument above).
MultiPoly sym_det(const SymbolicMatrix& m);

// Substitutes values into every entry and returns the exact matrix.
// Every variable occurring in the matrix must be bound.
ExactMatrix substitute(const SymbolicMatrix& m, const std::map<VarName, Rational>& binding);

// A proof that no completion of `witness` lies in `target`: the symbolic
// determinant of the lift is the zero polynomial, and the target class
// demands a positive minor in every order, in particular the (unique) minor
// of full order. The determinant is pinned so a stored certificate can be
// re-derived and compared.
struct ZeroDetCertificate {
    PartialMatrix witness;
    MatrixClass target;
    MultiPoly determinant;  // identically zero by construction
};

// Returns the certificate if sym_det(lift(p)) == 0, nullopt otherwise.
// Throws std::invalid_argument when the target class cannot be refuted this
// way (P0 / ssP0 / ssP01 tolerate a zero determinant).
std::optional<ZeroDetCertificate> prove_noncompletable_by_zero_det(const PartialMatrix& p,
                                                                   MatrixClass target);

}  // namespace sspc
