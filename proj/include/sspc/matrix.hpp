#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "sspc/rational.hpp"

namespace sspc {

// Indices are 1-based everywhere in this library; that is the convention the
// matrix class literature uses and mixing 0- and 1-based views breeds
// off-by-one bugs in minor bookkeeping.
class IndexSet {
  public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> elems);
    // Sorts, rejects duplicates and indices outside [1, n_bound] (n_bound 0
    // skips the upper check).
    explicit IndexSet(std::vector<int> elems, int n_bound = 0);

    static IndexSet full(int n);

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int i) const;
    const std::vector<int>& elements() const { return elems_; }

    std::string text() const;  // "{1,3}"

    auto operator<=>(const IndexSet&) const = default;

  private:
    std::vector<int> elems_;
};

// Dense exact-rational square matrix, orders 1..8.
class ExactMatrix {
  public:
    explicit ExactMatrix(int n);
    ExactMatrix(int n, std::vector<Rational> row_major);

    static ExactMatrix identity(int n);
    static ExactMatrix diagonal(const std::vector<Rational>& d);
    // Convenience for tests and tools: rows of integer literals.
    static ExactMatrix of(std::initializer_list<std::initializer_list<long>> rows);

    int order() const { return n_; }
    const Rational& at(int i, int j) const;  // 1-based
    Rational& at(int i, int j);

    ExactMatrix submatrix(const IndexSet& s) const;
    ExactMatrix with_rows_swapped(int r1, int r2) const;

    std::string to_text() const;  // parseable by parse_matrix
    bool operator==(const ExactMatrix&) const = default;

  private:
    int n_ = 0;
    std::vector<Rational> a_;  // row-major
};

// First line "n", then n rows of whitespace-separated rational tokens.
ExactMatrix parse_matrix(const std::string& text);

// Fraction-free (Bareiss) elimination with row pivoting on the first nonzero
// entry. Exact, no magnitude heuristics needed.
Rational det(const ExactMatrix& m);

// Plain first-row cofactor expansion. Kept as an independent route for
// cross-checking det(); do not "optimize" it into calling det().
Rational det_cofactor(const ExactMatrix& m);

// det of the principal submatrix on s. s must be nonempty and within order.
Rational principal_minor(const ExactMatrix& m, const IndexSet& s);

struct MinorEntry {
    IndexSet set;
    Rational value;
};

struct OrderSummary {
    int order = 0;  // k
    std::vector<MinorEntry> minors;  // all C(n,k) of them, sets in lex order
    Rational min_value;
    int positive = 0;
    int zero = 0;
    int negative = 0;
};

// All 2^n - 1 principal minors, grouped by order.
struct MinorProfile {
    int order = 0;  // n
    std::vector<OrderSummary> by_order;  // index k-1
    const OrderSummary& at_order(int k) const { return by_order.at(k - 1); }
};

MinorProfile minor_profile(const ExactMatrix& m);

// Visits all k-subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const IndexSet&)>& fn);

}  // namespace sspc
