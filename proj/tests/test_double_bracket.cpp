#include <doctest.h>

#include "dcalg/double_bracket.hpp"
#include "helpers.hpp"

using namespace testing_helpers;

namespace {

DoubleBracketTable linear_table() {
    DoubleBracketTable t({A("x")});
    NCPoly x = P(A("x"));
    t.set(A("x"), A("x"), T2(x, one()) - T2(one(), x));
    return t;
}

DoubleBracketTable square_table() {
    DoubleBracketTable t({A("x")});
    t.set(A("x"), A("x"), T2(P(A("x")), P(A("x"))));
    return t;
}

// Independent oracle: the cyclic form
// {{a,{{b,c}}}}_L + s123 {{b,{{c,a}}}}_L + s132 {{c,{{a,b}}}}_L, each term
// expanded directly from eval_bb without the extension helpers.
struct CyclicTerms {
    TensorPoly first{3}, second{3}, third{3};
};

TensorPoly left_ext_oracle(const NCPoly& a, const TensorPoly& t, const DoubleBracketTable& table) {
    TensorPoly r(3);
    for (const auto& [k, c] : t.terms()) {
        TensorPoly inner = eval_bb(a, NCPoly(k[0]), table);
        for (const auto& [ki, ci] : inner.terms()) r.add_term(TensorKey{ki[0], ki[1], k[1]}, c * ci);
    }
    return r;
}

CyclicTerms cyclic_terms(const NCPoly& a, const NCPoly& b, const NCPoly& c, const DoubleBracketTable& table) {
    CyclicTerms t;
    t.first = left_ext_oracle(a, eval_bb(b, c, table), table);
    t.second = sigma123(left_ext_oracle(b, eval_bb(c, a, table), table));
    t.third = sigma132(left_ext_oracle(c, eval_bb(a, b, table), table));
    return t;
}

}  // namespace

TEST_CASE("eval_bb examples") {
    auto table = linear_table();
    NCPoly x = P(A("x")), xx = W({A("x"), A("x")});
    CHECK(eval_bb(x, xx, table) == T2(xx, one()) - T2(one(), xx));
    CHECK(eval_bb(one(), xx, table).is_zero());
    CHECK(eval_bb(xx, one(), table).is_zero());
    DoubleBracketTable zero({A("x")});
    CHECK(eval_bb(xx, xx, zero).is_zero());
    CHECK_THROWS_AS(eval_bb(P(E("e")), x, table), AlgebraError);
}

TEST_CASE("eval_bb is a derivation in each argument") {
    DoubleBracketTable t({A("x"), A("y")});
    NCPoly x = P(A("x")), y = P(A("y"));
    t.set(A("x"), A("y"), T2(x, y) + Scalar(2) * T2(y * x, one()));
    t.set(A("y"), A("x"), T2(one(), x) - T2(y, y));
    t.set(A("y"), A("y"), T2(x, one()));
    Rng rng(2);
    std::vector<Symbol> gens{A("x"), A("y")};
    for (int i = 0; i < 50; ++i) {
        NCPoly a = random_poly(rng, gens, 0, 2, 2), b = random_poly(rng, gens, 0, 2, 2), c = random_poly(rng, gens, 0, 2, 2);
        // outer in the second argument
        CHECK(eval_bb(a, b * c, t) ==
              multiply_slot(eval_bb(a, c, t), 0, b, Side::Left) + multiply_slot(eval_bb(a, b, t), 1, c, Side::Right));
        // inner in the first argument
        CHECK(eval_bb(a * b, c, t) ==
              multiply_slot(eval_bb(b, c, t), 1, a, Side::Left) + multiply_slot(eval_bb(a, c, t), 0, b, Side::Right));
    }
}

TEST_CASE("bracket extensions") {
    auto table = linear_table();
    NCPoly x = P(A("x"));
    CHECK(bb_ext_L(x, T2(x, one()), table) == T3(x, one(), one()) - T3(one(), x, one()));
    CHECK(bb_ext_L(x, T2(one(), x), table).is_zero());
    CHECK(bb_ext_first_L(T2(x, one()), x, table) == T3(x, one(), one()) - T3(one(), one(), x));
    CHECK(bb_ext_R(x, T2(one(), x), table) == T3(one(), x, one()) - T3(one(), one(), x));
    CHECK_THROWS_AS(bb_ext_L(x, T3(x, x, x), table), AlgebraError);
}

TEST_CASE("skew convention as printed and antisymmetric") {
    CheckOptions paper;
    CheckOptions vdb;
    vdb.convention = Convention::VdB;
    auto lin = check_cyclic_skew(linear_table(), paper);
    CHECK_FALSE(lin.ok());
    REQUIRE(lin.find("double-skew") != nullptr);
    CHECK(lin.find("double-skew")->violations.front().witness == "(x, x)");
    CHECK(lin.find("double-skew")->violations.front().residual == "-2*1 ox x + 2*x ox 1");
    CHECK(check_cyclic_skew(linear_table(), vdb).ok());
    CHECK(check_cyclic_skew(square_table(), paper).ok());
    CHECK_FALSE(check_cyclic_skew(square_table(), vdb).ok());
    CHECK(check_cyclic_skew(DoubleBracketTable({A("x")}), paper).ok());
}

TEST_CASE("double Jacobi on the linear bracket") {
    auto table = linear_table();
    NCPoly x = P(A("x"));
    TensorPoly lhs = bb_ext_L(x, eval_bb(x, x, table), table);
    CHECK(lhs == T3(x, one(), one()) - T3(one(), x, one()));
    TensorPoly rhs = bb_ext_first_L(eval_bb(x, x, table), x, table) + bb_ext_R(x, eval_bb(x, x, table), table);
    CHECK(rhs == lhs);
    CheckOptions opts;
    opts.exhaustive = true;
    auto rep = check_double_jacobi(table, opts);
    CHECK(rep.ok());
    CHECK(rep.find("double-jacobi")->instances >= 64);
    CHECK(check_double_jacobi(DoubleBracketTable({A("x")})).ok());
    CHECK_FALSE(check_double_jacobi(square_table()).ok());
}

TEST_CASE("the two Jacobi formulations are related by the cyclic rearrangement") {
    // Under a convention with sign eps, s123{{b,{{c,a}}}}_L = eps {{b,{{a,c}}}}_R and
    // s132{{c,{{a,b}}}}_L = eps {{{{a,b}},c}}_L, so the cyclic sum equals
    // {{a,{{b,c}}}}_L + eps (R + first-L). With eps = -1 it is the Kac residual itself.
    std::vector<std::pair<DoubleBracketTable, int>> cases{{linear_table(), -1}, {square_table(), +1}};
    Rng rng(9);
    std::vector<Symbol> gens{A("x")};
    for (auto& [table, eps] : cases) {
        for (int i = 0; i < 40; ++i) {
            NCPoly a = random_poly(rng, gens, 0, 3, 2), b = random_poly(rng, gens, 0, 3, 2), c = random_poly(rng, gens, 0, 3, 2);
            auto terms = cyclic_terms(a, b, c, table);
            TensorPoly right = bb_ext_R(b, eval_bb(a, c, table), table);
            TensorPoly first = bb_ext_first_L(eval_bb(a, b, table), c, table);
            CHECK(terms.second == Scalar(eps) * right);
            CHECK(terms.third == Scalar(eps) * first);
            TensorPoly cyclic = terms.first + terms.second + terms.third;
            TensorPoly kac = double_jacobi_residual(a, b, c, table);
            if (eps < 0) CHECK(cyclic == kac);
            else CHECK(cyclic == kac + Scalar(2) * (right + first));
        }
    }
    // Both formulations reject the sigma-symmetric bracket x (x) x.
    auto sq = square_table();
    NCPoly x = P(A("x"));
    auto terms = cyclic_terms(x, x, x, sq);
    CHECK_FALSE((terms.first + terms.second + terms.third).is_zero());
    CHECK_FALSE(double_jacobi_residual(x, x, x, sq).is_zero());
}

TEST_CASE("Jacobi residual is trilinear") {
    DoubleBracketTable t({A("x"), A("y")});
    NCPoly x = P(A("x")), y = P(A("y"));
    t.set(A("x"), A("y"), T2(x, y));
    t.set(A("y"), A("y"), T2(y, one()) - T2(one(), x));
    Rng rng(4);
    std::vector<Symbol> gens{A("x"), A("y")};
    for (int i = 0; i < 30; ++i) {
        NCPoly a = random_poly(rng, gens, 1, 2, 2), b = random_poly(rng, gens, 1, 2, 2), c = random_poly(rng, gens, 1, 2, 2);
        Scalar alpha = rng.small_coefficient();
        TensorPoly base = double_jacobi_residual(a, b, c, t);
        CHECK(double_jacobi_residual(alpha * a, b, c, t) == alpha * base);
        CHECK(double_jacobi_residual(a, alpha * b, c, t) == alpha * base);
        CHECK(double_jacobi_residual(a, b, alpha * c, t) == alpha * base);
        NCPoly a2 = random_poly(rng, gens, 1, 2, 2);
        CHECK(double_jacobi_residual(a + a2, b, c, t) == base + double_jacobi_residual(a2, b, c, t));
    }
}
