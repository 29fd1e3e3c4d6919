#include "sspc/classes.hpp"

#include <array>

namespace sspc {

const char* to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::p: return "p";
        case MatrixClass::p0: return "p0";
        case MatrixClass::p0plus: return "p0plus";
        case MatrixClass::p01plus: return "p01plus";
        case MatrixClass::ssp: return "ssp";
        case MatrixClass::ssp0: return "ssp0";
        case MatrixClass::ssp01: return "ssp01";
        case MatrixClass::ssp0plus: return "ssp0plus";
        case MatrixClass::ssp01plus: return "ssp01plus";
    }
    throw std::logic_error("bad MatrixClass");
}

MatrixClass parse_class(const std::string& name) {
    static constexpr std::array<MatrixClass, 9> all = {
        MatrixClass::p,    MatrixClass::p0,    MatrixClass::p0plus,
        MatrixClass::p01plus, MatrixClass::ssp, MatrixClass::ssp0,
        MatrixClass::ssp01, MatrixClass::ssp0plus, MatrixClass::ssp01plus,
    };
    for (MatrixClass c : all)
        if (name == to_string(c)) return c;
    throw ParseError("unknown matrix class '" + name + "'");
}

bool requires_sign_symmetry(MatrixClass c) {
    switch (c) {
        case MatrixClass::ssp:
        case MatrixClass::ssp0:
        case MatrixClass::ssp01:
        case MatrixClass::ssp0plus:
        case MatrixClass::ssp01plus: return true;
        default: return false;
    }
}

bool requires_positive_diagonal(MatrixClass c) {
    return c == MatrixClass::p01plus || c == MatrixClass::ssp01 || c == MatrixClass::ssp01plus;
}

bool requires_positive_minor_per_order(MatrixClass c) {
    switch (c) {
        case MatrixClass::p:
        case MatrixClass::ssp:
        case MatrixClass::p0plus:
        case MatrixClass::p01plus:
        case MatrixClass::ssp0plus:
        case MatrixClass::ssp01plus: return true;
        default: return false;
    }
}

bool requires_all_minors_positive(MatrixClass c) {
    return c == MatrixClass::p || c == MatrixClass::ssp;
}

std::string MembershipVerdict::describe() const {
    if (member) return "member";
    struct V {
        std::string operator()(std::monostate) const { return "non-member"; }
        std::string operator()(const MinorViolation& w) const {
            return "minor on " + w.set.text() + " = " + to_string(w.value) +
                   (w.strict ? " (needs > 0)" : " (needs >= 0)");
        }
        std::string operator()(const NoPositiveMinor& w) const {
            return "no positive minor of order " + std::to_string(w.order);
        }
        std::string operator()(const NonPositiveDiagonal& w) const {
            return "diagonal entry (" + std::to_string(w.index) + "," + std::to_string(w.index) +
                   ") = " + to_string(w.value) + " (needs > 0)";
        }
        std::string operator()(const TwinViolation& w) const {
            return "twin pair (" + std::to_string(w.i) + "," + std::to_string(w.j) + "): " +
                   to_string(w.a_ij) + " * " + to_string(w.a_ji) + " = " + to_string(Rational(w.a_ij * w.a_ji)) +
                   " (needs positive product or both zero)";
        }
        std::string operator()(const CellDisagreement& w) const {
            return "cell (" + std::to_string(w.i) + "," + std::to_string(w.j) + "): specified " +
                   to_string(w.specified) + ", completion has " + to_string(w.got);
        }
    };
    return std::visit(V{}, witness);
}

namespace {

// Twin and diagonal scans share a deterministic order so the reported
// witness is stable: rows before columns, smaller indices first.
std::optional<TwinViolation> find_twin_violation(const ExactMatrix& m) {
    for (int i = 1; i <= m.order(); ++i)
        for (int j = i + 1; j <= m.order(); ++j) {
            const Rational& a = m.at(i, j);
            const Rational& b = m.at(j, i);
            if (a == 0 && b == 0) continue;
            if (a * b > 0) continue;
            return TwinViolation{i, j, a, b};
        }
    return std::nullopt;
}

std::optional<NonPositiveDiagonal> find_diag_violation(const ExactMatrix& m) {
    for (int i = 1; i <= m.order(); ++i)
        if (m.at(i, i) <= 0) return NonPositiveDiagonal{i, m.at(i, i)};
    return std::nullopt;
}

}  // namespace

MembershipVerdict is_member(const ExactMatrix& m, MatrixClass c, const MinorProfile& profile) {
    MembershipVerdict v;
    if (requires_sign_symmetry(c)) {
        if (auto w = find_twin_violation(m)) {
            v.witness = *w;
            return v;
        }
    }
    if (requires_positive_diagonal(c)) {
        if (auto w = find_diag_violation(m)) {
            v.witness = *w;
            return v;
        }
    }
    const bool strict = requires_all_minors_positive(c);
    const bool need_positive_per_order = requires_positive_minor_per_order(c) && !strict;
    for (const OrderSummary& s : profile.by_order) {
        for (const MinorEntry& e : s.minors) {
            if (e.value < 0 || (strict && e.value == 0)) {
                v.witness = MinorViolation{e.set, e.value, strict};
                return v;
            }
        }
        if (need_positive_per_order && s.positive == 0) {
            v.witness = NoPositiveMinor{s.order};
            return v;
        }
    }
    v.member = true;
    return v;
}

MembershipVerdict is_member(const ExactMatrix& m, MatrixClass c) {
    // Recomputing the profile per call is fine at these orders (<= 255
    // minors); callers that loop over classes pass a shared profile.
    return is_member(m, c, minor_profile(m));
}

namespace {

PartialVerdict partial_check(const PartialMatrix& p, MatrixClass c) {
    PartialVerdict out;
    const int n = p.order();

    bool all_diag = true;
    for (int i = 1; i <= n; ++i)
        if (!p.specified(i, i)) all_diag = false;
    if (!all_diag)
        out.pcase = PartialCase::some_diagonal_unspecified;
    else if (!p.is_fully_specified())
        out.pcase = PartialCase::diagonal_specified_incomplete;
    else
        out.pcase = PartialCase::fully_specified;

    if (out.pcase == PartialCase::fully_specified) {
        MembershipVerdict mv = is_member(p.to_exact(), c);
        out.member = mv.member;
        if (!mv.member) out.reason = mv.describe();
        return out;
    }

    if (requires_sign_symmetry(c)) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (!p.specified(i, j) || !p.specified(j, i)) continue;
                const Rational& a = p.value(i, j);
                const Rational& b = p.value(j, i);
                if ((a == 0 && b == 0) || a * b > 0) continue;
                out.reason = MembershipVerdict{false, TwinViolation{i, j, a, b}}.describe();
                return out;
            }
    }

    if (out.pcase == PartialCase::diagonal_specified_incomplete && requires_positive_diagonal(c)) {
        for (int i = 1; i <= n; ++i)
            if (p.value(i, i) <= 0) {
                out.reason =
                    MembershipVerdict{false, NonPositiveDiagonal{i, p.value(i, i)}}.describe();
                return out;
            }
    }

    const bool strict = requires_all_minors_positive(c);
    for (int k = 1; k <= n; ++k) {
        std::optional<MinorViolation> bad;
        for_each_subset(n, k, [&](const IndexSet& s) {
            if (bad || !p.fully_specified_on(s)) return;
            const auto& e = s.elements();
            ExactMatrix sub(k);
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j)
                    sub.at(i, j) = p.value(e[static_cast<std::size_t>(i) - 1],
                                           e[static_cast<std::size_t>(j) - 1]);
            Rational v = det(sub);
            if (v < 0 || (strict && v == 0)) bad = MinorViolation{s, v, strict};
        });
        if (bad) {
            out.reason = MembershipVerdict{false, *bad}.describe();
            return out;
        }
    }

    out.member = true;
    return out;
}

}  // namespace

PartialVerdict is_partial_member(const PartialMatrix& p) {
    return partial_check(p, MatrixClass::ssp01plus);
}

PartialVerdict is_partial_member_for(const PartialMatrix& p, MatrixClass c) {
    return partial_check(p, c);
}

MembershipVerdict verify_completion(const PartialMatrix& p, const ExactMatrix& m, MatrixClass c) {
    if (p.order() != m.order()) throw std::invalid_argument("completion order mismatch");
    for (int i = 1; i <= p.order(); ++i)
        for (int j = 1; j <= p.order(); ++j) {
            if (!p.specified(i, j)) continue;
            if (p.value(i, j) != m.at(i, j)) {
                MembershipVerdict v;
                v.witness = CellDisagreement{i, j, p.value(i, j), m.at(i, j)};
                return v;
            }
        }
    return is_member(m, c);
}

}  // namespace sspc
