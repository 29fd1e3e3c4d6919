#include "sspc/partial_matrix.hpp"

#include <sstream>

namespace sspc {

PartialMatrix::PartialMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
    if (n < 1 || n > 8) throw std::invalid_argument("matrix order must be in 1..8");
}

PartialMatrix PartialMatrix::fully_specified(const ExactMatrix& m) {
    PartialMatrix p(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j) p.set(i, j, m.at(i, j));
    return p;
}

std::size_t PartialMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

bool PartialMatrix::specified(int i, int j) const { return cells_[idx(i, j)].has_value(); }

const Rational& PartialMatrix::value(int i, int j) const {
    const auto& c = cells_[idx(i, j)];
    if (!c) throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(j) + ") is unspecified");
    return *c;
}

void PartialMatrix::set(int i, int j, Rational v) { cells_[idx(i, j)] = std::move(v); }

void PartialMatrix::unset(int i, int j) { cells_[idx(i, j)].reset(); }

int PartialMatrix::specified_count() const {
    int c = 0;
    for (const auto& cell : cells_)
        if (cell) ++c;
    return c;
}

bool PartialMatrix::is_fully_specified() const {
    return specified_count() == n_ * n_;
}

ExactMatrix PartialMatrix::to_exact() const {
    ExactMatrix m(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.at(i, j) = value(i, j);
    return m;
}

bool PartialMatrix::fully_specified_on(const IndexSet& s) const {
    for (int i : s.elements())
        for (int j : s.elements())
            if (!specified(i, j)) return false;
    return true;
}

std::string PartialMatrix::to_text() const {
    std::string out = std::to_string(n_) + "\n";
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out += " ";
            out += specified(i, j) ? to_string(value(i, j)) : std::string("?");
        }
        out += "\n";
    }
    return out;
}

PartialMatrix parse_partial_matrix(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw ParseError("partial matrix file: missing order line");
    if (n < 1 || n > 8) throw ParseError("partial matrix file: order must be in 1..8");
    PartialMatrix p(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("partial matrix file: truncated entries");
            if (tok != "?") p.set(i, j, parse_rational(tok));
        }
    std::string extra;
    if (in >> extra) throw ParseError("partial matrix file: trailing token '" + extra + "'");
    return p;
}

}  // namespace sspc
