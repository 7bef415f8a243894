#include <doctest.h>

#include "dcalg/diffalg.hpp"
#include "dcalg/sampling.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

DerivationTable x_to_u() {
    DerivationTable t;
    t.set(A("x"), P(E("u")));
    return t;
}

}  // namespace

TEST_CASE("derivation examples") {
    auto table = x_to_u();
    CHECK(d(P(A("x")), table) == P(E("u")));
    CHECK(d(P(E("e")), table) == P(E("e", 1)));
    CHECK(d(W({A("x"), E("e")}), table) == W({E("u"), E("e")}) + W({A("x"), E("e", 1)}));
    CHECK(d(one(), table).is_zero());
    CHECK_THROWS_AS(d(P(A("y")), table), AlgebraError);
}

TEST_CASE("derivation table validation") {
    DerivationTable t;
    CHECK_THROWS_AS(t.set(A("x"), P(A("x"))), AlgebraError);
    CHECK_THROWS_AS(t.set(A("x"), P(E("u", 1))), AlgebraError);
    CHECK_THROWS_AS(t.set(E("u"), P(E("u"))), AlgebraError);
    t.set(A("x"), W({A("x"), E("u")}) - W({E("u"), A("x")}));
    CHECK(t.contains(A("x")));
}

TEST_CASE("total derivative on tensors") {
    auto table = x_to_u();
    NCPoly x = P(A("x")), u = P(E("u"));
    CHECK(d_tensor(T2(one(), one()), table).is_zero());
    CHECK(d_tensor(T2(x, one()), table) == T2(u, one()));
    CHECK(d_tensor(T2(x, x), table) == T2(u, x) + T2(x, u));
    CHECK(d_tensor(T3(x, one(), x), table) == T3(u, one(), x) + T3(x, one(), u));
}

TEST_CASE("derivation is a degree-one derivation on random inputs") {
    auto table = x_to_u();
    table.set(A("y"), W({A("x"), E("u")}));
    std::vector<Symbol> alphabet{A("x"), A("y"), E("u"), E("v", 1)};
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        NCPoly p(random_word(rng, alphabet, 0, 3));
        NCPoly q(random_word(rng, alphabet, 0, 3));
        CHECK(d(p * q, table) == d(p, table) * q + p * d(q, table));
        NCPoly dp = d(p, table);
        if (!dp.is_zero()) CHECK(dp.homogeneous_weight() == p.homogeneous_weight() + 1);
    }
}

TEST_CASE("total derivative commutes with slot permutations") {
    auto table = x_to_u();
    NCPoly x = P(A("x")), u = P(E("u"));
    TensorPoly t = T3(x * x, u, one()) - Scalar(3) * T3(x, x * u, x);
    for (const auto& s : Permutation::all(3)) {
        CHECK(d_tensor(apply_sigma(s, t), table) == apply_sigma(s, d_tensor(t, table)));
    }
}

TEST_CASE("lambda shifts") {
    auto table = x_to_u();
    NCPoly x = P(A("x")), u = P(E("u"));
    LambdaPoly p = LambdaPoly::monomial(T2(one(), one()), 1);
    CHECK(lambda_shift_total(p, Var::Lambda, -1, table) == LambdaPoly::monomial(-T2(one(), one()), 1));
    LambdaPoly q = LambdaPoly::monomial(T2(x, one()), 1);
    CHECK(lambda_shift_total(q, Var::Lambda, +1, table) ==
          LambdaPoly::monomial(T2(x, one()), 1) + LambdaPoly::constant(T2(u, one())));
    LambdaPoly c = LambdaPoly::constant(T2(x, x));
    CHECK(lambda_shift_total(c, Var::Lambda, -1, table) == c);
}

TEST_CASE("shifting by +d then -d is the identity, as is the reflection twice") {
    DerivationTable table = x_to_u();
    std::vector<Symbol> alphabet{A("x"), E("u"), E("v")};
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        LambdaPoly p = zero_lambda(2);
        for (int deg = 0; deg <= 2; ++deg) {
            TensorPoly c = tensor(random_poly(rng, alphabet, 0, 2, 2), random_poly(rng, alphabet, 0, 2, 2));
            p.add(deg, 0, c);
        }
        LambdaPoly there = lambda_shift(p, Var::Lambda, +1, +1, table);
        CHECK(lambda_shift(there, Var::Lambda, +1, -1, table) == p);
        LambdaPoly reflected = lambda_shift_total(p, Var::Lambda, -1, table);
        CHECK(lambda_shift_total(reflected, Var::Lambda, -1, table) == p);
    }
}

TEST_CASE("arrow insertion and exponential action") {
    auto table = x_to_u();
    NCPoly x = P(A("x")), u = P(E("u")), e = P(E("e"));
    LambdaPoly p = LambdaPoly::monomial(T2(one(), one()), 1);
    CHECK(arrow_insert(p, x, ArrowMode::Star1, table) ==
          LambdaPoly::monomial(T2(x, one()), 1) + LambdaPoly::constant(T2(u, one())));
    CHECK(arrow_insert(p, e, ArrowMode::Otimes1, table) ==
          LambdaPoly::monomial(T3(one(), e, one()), 1) + LambdaPoly::constant(T3(one(), P(E("e", 1)), one())));
    CHECK(arrow_insert(zero_lambda(2), x, ArrowMode::Star1, table).is_zero());
    CHECK(exp_partial_left(x, p, table) == LambdaPoly::monomial(T2(one(), x), 1) + LambdaPoly::constant(T2(one(), u)));
    CHECK(exp_partial_left(one(), p, table) == p);
    LambdaPoly c = LambdaPoly::constant(T2(u, x));
    CHECK(exp_partial_left(x, c, table) == LambdaPoly::constant(T2(u, x * x)));
}

TEST_CASE("inserting the unit performs no shift") {
    auto table = x_to_u();
    NCPoly x = P(A("x")), u = P(E("u"));
    LambdaPoly p = LambdaPoly::monomial(T2(x, u), 2) + LambdaPoly::constant(T2(u, one()));
    LambdaPoly star1 = p.map([](const TensorPoly& t) { return star(NCPoly(1), t, 1, Side::Right); });
    CHECK(arrow_insert(p, one(), ArrowMode::Star1, table) == star1);
    LambdaPoly ins = p.map([](const TensorPoly& t) { return otimes1(t, TensorPoly(NCPoly(1))); });
    CHECK(arrow_insert(p, one(), ArrowMode::Otimes1, table) == ins);
}
