#include "sspc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sspc {

IndexSet::IndexSet(std::initializer_list<int> elems)
    : IndexSet(std::vector<int>(elems), 0) {}

IndexSet::IndexSet(std::vector<int> elems, int n_bound) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        if (elems_[k] < 1 || (n_bound > 0 && elems_[k] > n_bound))
            throw std::invalid_argument("index out of range in IndexSet");
        if (k > 0 && elems_[k] == elems_[k - 1])
            throw std::invalid_argument("duplicate index in IndexSet");
    }
}

IndexSet IndexSet::full(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return IndexSet(std::move(v), n);
}

bool IndexSet::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

std::string IndexSet::text() const {
    std::string s = "{";
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(elems_[k]);
    }
    return s + "}";
}

namespace {
void check_order(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("matrix order must be in 1..8");
}
}  // namespace

ExactMatrix::ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {
    check_order(n);
}

ExactMatrix::ExactMatrix(int n, std::vector<Rational> row_major) : n_(n), a_(std::move(row_major)) {
    check_order(n);
    if (a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count does not match order");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(static_cast<int>(d.size()));
    for (int i = 1; i <= m.order(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i) - 1];
    return m;
}

ExactMatrix ExactMatrix::of(std::initializer_list<std::initializer_list<long>> rows) {
    int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    int i = 1;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("ragged matrix literal");
        int j = 1;
        for (long v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

const Rational& ExactMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

Rational& ExactMatrix::at(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

ExactMatrix ExactMatrix::submatrix(const IndexSet& s) const {
    if (s.empty()) throw std::invalid_argument("empty index set");
    const auto& e = s.elements();
    if (e.back() > n_) throw std::invalid_argument("index set exceeds order");
    ExactMatrix m(s.size());
    for (int i = 1; i <= s.size(); ++i)
        for (int j = 1; j <= s.size(); ++j)
            m.at(i, j) = at(e[static_cast<std::size_t>(i) - 1], e[static_cast<std::size_t>(j) - 1]);
    return m;
}

ExactMatrix ExactMatrix::with_rows_swapped(int r1, int r2) const {
    ExactMatrix m = *this;
    for (int j = 1; j <= n_; ++j) std::swap(m.at(r1, j), m.at(r2, j));
    return m;
}

std::string ExactMatrix::to_text() const {
    std::string out = std::to_string(n_) + "\n";
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out += " ";
            out += to_string(at(i, j));
        }
        out += "\n";
    }
    return out;
}

ExactMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw ParseError("matrix file: missing order line");
    if (n < 1 || n > 8) throw ParseError("matrix file: order must be in 1..8");
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix file: truncated entries");
            m.at(i, j) = parse_rational(tok);
        }
    std::string extra;
    if (in >> extra) throw ParseError("matrix file: trailing token '" + extra + "'");
    return m;
}

Rational det(const ExactMatrix& m) {
    const int n = m.order();
    ExactMatrix w = m;
    int sign = 1;
    Rational prev(1);
    for (int k = 1; k < n; ++k) {
        if (w.at(k, k) == 0) {
            int pivot_row = 0;
            for (int r = k + 1; r <= n; ++r)
                if (w.at(r, k) != 0) { pivot_row = r; break; }
            if (pivot_row == 0) return Rational(0);
            w = w.with_rows_swapped(k, pivot_row);
            sign = -sign;
        }
        // One-step fraction-free update; the division by the previous pivot
        // is exact (Sylvester identity), also over the rationals.
        for (int i = k + 1; i <= n; ++i)
            for (int j = k + 1; j <= n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    Rational d = w.at(n, n);
    return sign > 0 ? d : Rational(-d);
}

Rational det_cofactor(const ExactMatrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(1, 1);
    Rational acc(0);
    for (int j = 1; j <= n; ++j) {
        if (m.at(1, j) == 0) continue;
        ExactMatrix sub(n - 1);
        for (int r = 2; r <= n; ++r) {
            int cc = 1;
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rational term = m.at(1, j) * det_cofactor(sub);
        if (j % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

Rational principal_minor(const ExactMatrix& m, const IndexSet& s) {
    return det(m.submatrix(s));
}

void for_each_subset(int n, int k, const std::function<void(const IndexSet&)>& fn) {
    if (k < 1 || k > n) return;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(IndexSet(pick, n));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

MinorProfile minor_profile(const ExactMatrix& m) {
    MinorProfile p;
    p.order = m.order();
    for (int k = 1; k <= m.order(); ++k) {
        OrderSummary s;
        s.order = k;
        for_each_subset(m.order(), k, [&](const IndexSet& set) {
            Rational v = principal_minor(m, set);
            if (s.minors.empty() || v < s.min_value) s.min_value = v;
            int sg = sign_of(v);
            if (sg > 0) ++s.positive;
            else if (sg < 0) ++s.negative;
            else ++s.zero;
            s.minors.push_back({set, std::move(v)});
        });
        p.by_order.push_back(std::move(s));
    }
    return p;
}

}  // namespace sspc
