#include "doctest.h"

#include <set>

#include "sspc/completion.hpp"
#include "sspc/matrix.hpp"

using namespace sspc;

namespace {

ExactMatrix random_matrix(int n, Rng& rng) {
    std::vector<Rational> pool = {rat(-4, 1), rat(-2, 1),  rat(-1, 1), rat(-1, 2), rat(-1, 8),
                                  rat(0, 1),  rat(0, 1),   rat(1, 8),  rat(1, 3),  rat(1, 2),
                                  rat(1, 1),  rat(5, 2),   rat(4, 1),  rat(7, 3)};
    ExactMatrix m = ExactMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = rng.pick(pool);
    return m;
}

}  // namespace

TEST_CASE("index sets") {
    IndexSet s{1, 3};
    CHECK(s.text() == "{1,3}");
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(s.elements() == std::vector<int>{1, 3});
    CHECK(IndexSet::full(3).text() == "{1,2,3}");
}

TEST_CASE("matrix parse and render round trip") {
    const char* text = "3\n1 -1 1/2\n0 1 2\n-3/4 0 1\n";
    ExactMatrix m = parse_matrix(text);
    CHECK(m.order() == 3);
    CHECK(m.at(1, 3) == rat(1, 2));
    CHECK(m.at(3, 1) == rat(-3, 4));
    CHECK(m.to_text() == text);
    CHECK(parse_matrix(m.to_text()) == m);
}

TEST_CASE("principal minor on a named submatrix") {
    ExactMatrix m = ExactMatrix::of({{1, 1, 1}, {1, 1, 1}, {1, 1, 7}});
    CHECK(principal_minor(m, IndexSet{1, 3}) == Rational(6));
    CHECK(principal_minor(m, IndexSet{1, 2}) == Rational(0));
    CHECK(principal_minor(m, IndexSet{2}) == Rational(1));
    CHECK(det(m) == Rational(0));
}

TEST_CASE("profile covers every nonempty subset with per-order tallies") {
    ExactMatrix m = ExactMatrix::of({{1, 1, 1}, {1, 1, 1}, {1, 1, 7}});
    MinorProfile p = minor_profile(m);
    CHECK(p.order == 3);

    int total = 0;
    std::set<IndexSet> seen;
    for (const OrderSummary& s : p.by_order) {
        total += static_cast<int>(s.minors.size());
        for (const MinorEntry& e : s.minors) {
            seen.insert(e.set);
            CHECK(e.value == principal_minor(m, e.set));
        }
    }
    CHECK(total == 7);  // 2^3 - 1
    CHECK(static_cast<int>(seen.size()) == 7);

    const OrderSummary& order2 = p.at_order(2);
    CHECK(order2.positive == 2);  // {1,3} and {2,3}
    CHECK(order2.zero == 1);      // {1,2}
    CHECK(order2.negative == 0);
    CHECK(order2.min_value == Rational(0));
    CHECK(p.at_order(3).zero == 1);
}

TEST_CASE("row swap flips the determinant sign") {
    ExactMatrix m = ExactMatrix::of({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(det(m.with_rows_swapped(1, 3)) == -det(m));
}

TEST_CASE("fraction-free and cofactor determinants agree") {
    // the two routes share no code; this is the cheap version of the
    // acceptance sweep
    Rng rng(411);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            ExactMatrix m = random_matrix(n, rng);
            CHECK(det(m) == det_cofactor(m));
        }
    }
}

TEST_CASE("determinants of structured matrices") {
    CHECK(det(ExactMatrix::identity(4)) == Rational(1));
    CHECK(det(ExactMatrix::diagonal({rat(1, 2), Rational(3), Rational(-2)})) == Rational(-3));
    // rank-deficient
    CHECK(det(ExactMatrix::of({{1, 2}, {2, 4}})) == Rational(0));
    CHECK(det_cofactor(ExactMatrix::of({{1, 2}, {2, 4}})) == Rational(0));
}

TEST_CASE("for_each_subset yields lexicographic k-subsets") {
    std::vector<std::string> got;
    for_each_subset(4, 2, [&](const IndexSet& s) { got.push_back(s.text()); });
    CHECK(got == std::vector<std::string>{"{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"});
}

TEST_CASE("matrix parse failures") {
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n3 x\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("9\n"), ParseError);  // order cap is 8
}
