#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sspc/matrix.hpp"

namespace sspc {

// Square matrix where each cell is either a specified rational or
// unspecified. The text form mirrors ExactMatrix with '?' for holes:
//
//   3
//   1 -1 ?
//   -1 1 ?
//   ? ? 1
class PartialMatrix {
  public:
    explicit PartialMatrix(int n);

    static PartialMatrix fully_specified(const ExactMatrix& m);

    int order() const { return n_; }
    bool specified(int i, int j) const;
    const Rational& value(int i, int j) const;  // throws if unspecified
    void set(int i, int j, Rational v);
    void unset(int i, int j);

    int specified_count() const;
    bool is_fully_specified() const;
    ExactMatrix to_exact() const;  // throws std::invalid_argument on holes

    // Index sets whose induced principal submatrix has no holes.
    bool fully_specified_on(const IndexSet& s) const;

    std::string to_text() const;
    bool operator==(const PartialMatrix&) const = default;

  private:
    std::size_t idx(int i, int j) const;
    int n_ = 0;
    std::vector<std::optional<Rational>> cells_;
};

PartialMatrix parse_partial_matrix(const std::string& text);

}  // namespace sspc
