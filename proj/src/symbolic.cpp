#include "sspc/symbolic.hpp"

namespace sspc {

SymbolicMatrix::SymbolicMatrix(int order)
    : n(order), entries(static_cast<std::size_t>(order) * order) {
    if (order < 1 || order > 8) throw std::invalid_argument("matrix order must be in 1..8");
}

const MultiPoly& SymbolicMatrix::at(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("matrix index");
    return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)];
}

MultiPoly& SymbolicMatrix::at(int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("matrix index");
    return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)];
}

SymbolicMatrix lift(const PartialMatrix& p) {
    SymbolicMatrix m(p.order());
    for (int i = 1; i <= p.order(); ++i)
        for (int j = 1; j <= p.order(); ++j) {
            if (p.specified(i, j))
                m.at(i, j) = MultiPoly::constant(p.value(i, j));
            else
                m.at(i, j) = MultiPoly::variable(i == j ? VarName::diag(i) : VarName::off(i, j));
        }
    return m;
}

namespace {

MultiPoly sym_det_rec(const SymbolicMatrix& m) {
    const int n = m.n;
    if (n == 1) return m.at(1, 1);
    MultiPoly acc;
    for (int j = 1; j <= n; ++j) {
        if (m.at(1, j).is_zero()) continue;
        SymbolicMatrix sub(n - 1);
        for (int r = 2; r <= n; ++r) {
            int cc = 1;
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        MultiPoly term = m.at(1, j) * sym_det_rec(sub);
        if (j % 2 == 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

}  // namespace

MultiPoly sym_det(const SymbolicMatrix& m) {
    if (m.n > 6) throw std::invalid_argument("symbolic determinant supports orders 1..6");
    return sym_det_rec(m);
}

ExactMatrix substitute(const SymbolicMatrix& m, const std::map<VarName, Rational>& binding) {
    ExactMatrix out(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j) out.at(i, j) = m.at(i, j).evaluate(binding);
    return out;
}

std::optional<ZeroDetCertificate> prove_noncompletable_by_zero_det(const PartialMatrix& p,
                                                                   MatrixClass target) {
    if (!requires_positive_minor_per_order(target))
        throw std::invalid_argument(
            std::string("class ") + to_string(target) +
            " tolerates a zero determinant; a vanishing symbolic determinant proves nothing");
    MultiPoly d = sym_det(lift(p));
    if (!d.is_zero()) return std::nullopt;
    return ZeroDetCertificate{p, target, std::move(d)};
}

}  // namespace sspc
