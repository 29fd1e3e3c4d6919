#include "doctest.h"

#include <map>

#include "sspc/completion.hpp"
#include "sspc/symbolic.hpp"

using namespace sspc;

namespace {

PartialMatrix two_cycle_witness_3() {
    PartialMatrix p(3);
    p.set(1, 1, 1);
    p.set(2, 2, 1);
    p.set(3, 3, 1);
    p.set(1, 2, -1);
    p.set(2, 1, -1);
    return p;
}

PartialMatrix all_ones_missing_corner() {
    PartialMatrix p(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (!(i == 3 && j == 3)) p.set(i, j, 1);
    return p;
}

// random partial matrix, independent of the library's samplers
PartialMatrix random_partial(int n, Rng& rng) {
    std::vector<Rational> pool = {Rational(-2), rat(-1, 2), Rational(0), rat(1, 2), Rational(1),
                                  Rational(3)};
    PartialMatrix p(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (rng.chance(1, 2)) p.set(i, j, rng.pick(pool));
    return p;
}

}  // namespace

TEST_CASE("lift maps holes to their variables") {
    PartialMatrix p(2);
    p.set(1, 2, rat(3, 4));
    SymbolicMatrix s = lift(p);
    CHECK(s.at(1, 1) == MultiPoly::variable(VarName::diag(1)));
    CHECK(s.at(2, 2) == MultiPoly::variable(VarName::diag(2)));
    CHECK(s.at(1, 2) == MultiPoly::constant(rat(3, 4)));
    CHECK(s.at(2, 1) == MultiPoly::variable(VarName::off(2, 1)));
}

TEST_CASE("fully symbolic 2x2 determinant") {
    CHECK(sym_det(lift(PartialMatrix(2))).text() == "d1*d2 - x12*x21");
}

TEST_CASE("two-cycle witness determinant") {
    CHECK(sym_det(lift(two_cycle_witness_3())).text() ==
          "-x13*x31 - x13*x32 - x23*x31 - x23*x32");
}

TEST_CASE("duplicated rows force a vanishing determinant") {
    PartialMatrix p = all_ones_missing_corner();
    CHECK(sym_det(lift(p)).is_zero());

    auto cert = prove_noncompletable_by_zero_det(p, MatrixClass::ssp01plus);
    REQUIRE(cert.has_value());
    CHECK(cert->witness == p);
    CHECK(cert->determinant.is_zero());

    // inapplicable classes are a caller bug, not a "no"
    CHECK_THROWS_AS(prove_noncompletable_by_zero_det(p, MatrixClass::ssp0), std::invalid_argument);
    CHECK_THROWS_AS(prove_noncompletable_by_zero_det(p, MatrixClass::ssp01), std::invalid_argument);

    // the witness with a nonvanishing determinant yields no certificate
    CHECK(!prove_noncompletable_by_zero_det(two_cycle_witness_3(), MatrixClass::ssp01plus));
}

TEST_CASE("substitution commutes with the determinant") {
    Rng rng(92);
    std::vector<Rational> pool = {Rational(-1), rat(2, 3), Rational(2), rat(-1, 4), Rational(5)};
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            PartialMatrix p = random_partial(n, rng);
            SymbolicMatrix s = lift(p);
            MultiPoly d = sym_det(s);
            std::map<VarName, Rational> bind;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (!p.specified(i, j))
                        bind[i == j ? VarName::diag(i) : VarName::off(i, j)] = rng.pick(pool);
            ExactMatrix m = substitute(s, bind);
            CHECK(d.evaluate(bind) == det(m));
            CHECK(d.evaluate(bind) == det_cofactor(m));
        }
    }
}

TEST_CASE("the witness determinant admits a positive value") {
    // mixed signs across the two free twin pairs make the product negative,
    // so the determinant -(x13+x23)(x31+x32) comes out positive
    MultiPoly d = sym_det(lift(two_cycle_witness_3()));
    std::map<VarName, Rational> bind{{VarName::off(1, 3), rat(1, 2)},
                                     {VarName::off(3, 1), rat(1, 2)},
                                     {VarName::off(2, 3), rat(-1, 4)},
                                     {VarName::off(3, 2), rat(-4, 5)}};
    CHECK(d.evaluate(bind) == rat(3, 40));
}

TEST_CASE("symbolic determinant order cap") {
    CHECK_NOTHROW(sym_det(lift(PartialMatrix(6))));
    CHECK_THROWS_AS(sym_det(lift(PartialMatrix(7))), std::invalid_argument);
}
