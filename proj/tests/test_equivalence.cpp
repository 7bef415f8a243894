#include <doctest.h>

#include "dcalg/equivalence.hpp"
#include "structures.hpp"

using namespace testing_helpers;

namespace {

LambdaPoly lam(const TensorPoly& t, int p = 1) { return LambdaPoly::monomial(t, p); }
LambdaPoly cst(const TensorPoly& t) { return LambdaPoly::constant(t); }

}  // namespace

TEST_CASE("hyp to a lambda-bracket table") {
    auto t = cd_to_dpva(hyp());
    Symbol u = E("u"), v = E("v"), x = A("x");
    CHECK(t.graded());
    CHECK(t.get(u, v) == lam(T2(one(), one())));
    CHECK(t.get(v, u) == lam(T2(one(), one())));
    CHECK(t.get(u, u).is_zero());
    CHECK(t.get(v, v).is_zero());
    CHECK(t.get(u, x).is_zero());
    CHECK(t.get(v, x) == cst(T2(one(), one())));
    CHECK(t.get(x, v) == cst(-1 * T2(one(), one())));
    CHECK(t.get(x, x).is_zero());
    CHECK(t.derivation() == hyp().derivation());
}

TEST_CASE("zero and single-generator structures") {
    CHECK(cd_to_dpva(zero_structure()).entries().empty());
    auto t = cd_to_dpva(single());
    CHECK(t.get(E("e"), E("e")) == lam(T2(one(), one())));
    CHECK(t.entries().size() == 1);
}

TEST_CASE("reading a table back") {
    LambdaBracketTable t({E("e")}, DerivationTable{}, true);
    t.set(E("e"), E("e"), lam(T2(one(), one())));
    DCDStructure s = dpva_to_cd(t);
    CHECK(s.pairing(E("e"), E("e")) == T2(one(), one()));
    CHECK(s.bracket(E("e"), E("e")).is_zero());

    DerivationTable der;
    der.declare(A("x"));
    LambdaBracketTable zero({A("x"), E("u"), E("v")}, der, true);
    CHECK(dpva_to_cd(zero) == zero_structure());
}

TEST_CASE("conversion errors") {
    LambdaBracketTable quad({E("e")}, DerivationTable{}, true);
    quad.set(E("e"), E("e"), lam(T2(one(), one()), 2));
    CHECK_THROWS_AS(dpva_to_cd(quad), AlgebraError);

    LambdaBracketTable ungraded({E("e")}, DerivationTable{});
    CHECK_THROWS_AS(dpva_to_cd(ungraded), AlgebraError);

    // lambda-coefficient that is not a pairing value
    LambdaBracketTable heavy({E("e")}, DerivationTable{}, true);
    heavy.set(E("e"), E("e"), lam(T2(P(E("e")), one())));
    CHECK_THROWS_AS(dpva_to_cd(heavy), AlgebraError);

    // {{v_l x}} must equal <<v, dx>> = <<v,u>> = 1 (x) 1
    auto t = cd_to_dpva(hyp());
    t.set(E("v"), A("x"), LambdaPoly::constant(TensorPoly(2)));
    CHECK_THROWS_AS(dpva_to_cd(t), AlgebraError);
    auto t2 = cd_to_dpva(hyp());
    t2.set(A("x"), A("x"), cst(T2(P(A("x")), one())));
    CHECK_THROWS_AS(dpva_to_cd(t2), AlgebraError);
}

TEST_CASE("round trips on the fixtures") {
    for (const auto& s : {hyp(), zero_structure(), single(), antisymmetric_bracket()}) {
        Report r = roundtrip_check(s);
        CHECK(r.ok());
        CHECK(r.count(Status::Info) == 0);
        CHECK(dpva_to_cd(cd_to_dpva(s)) == s);
        Report rev = roundtrip_check_rev(cd_to_dpva(s));
        CHECK(rev.ok());
        CHECK(rev.count(Status::Info) == 0);
    }
}

TEST_CASE("transport is informational for a structure failing its axioms") {
    Report r = roundtrip_check(hyp(true));
    CHECK(r.find("roundtrip")->status == Status::Pass);
    CHECK(r.find("transport")->status == Status::Info);
    REQUIRE_FALSE(r.notes().empty());
}

TEST_CASE("reverse round trip ignores generator order") {
    DerivationTable der;
    der.set(A("x"), P(E("u")));
    LambdaBracketTable t({E("u"), A("x"), E("v")}, der, true);
    auto image = cd_to_dpva(hyp());
    for (const auto& [key, value] : image.entries()) t.set(key.first, key.second, value);
    CHECK_FALSE(t == image);
    CHECK(same_table(t, image));
    CHECK(roundtrip_check_rev(t).ok());
}

TEST_CASE("property: round trip and axiom transport over the corpus") {
    CorpusOptions opts;
    opts.random_candidates = 150;
    opts.axiom_samples = 8;
    CheckOptions check;
    check.samples = 8;
    check.max_degree = 2;
    for (const auto& s : search_corpus(opts)) {
        auto t = cd_to_dpva(s);
        CHECK(dpva_to_cd(t) == s);
        CHECK(check_dpva(t, check).ok());
        CHECK(same_table(cd_to_dpva(dpva_to_cd(t)), t));
        CHECK(check_cd_axioms(dpva_to_cd(t), check).ok());
    }
}

TEST_CASE("property: a skew-violating table transports to a structure violating CD.a") {
    // {{e_l e}} = e (x) 1 + 1 (x) e is graded but not skew
    LambdaBracketTable t({E("e")}, DerivationTable{}, true);
    NCPoly e = P(E("e"));
    t.set(E("e"), E("e"), cst(T2(e, one()) + T2(one(), e)));
    CHECK_FALSE(check_dpva(t).ok());
    DCDStructure s = dpva_to_cd(t);
    CHECK(check_cd_axioms(s).find("CD.a")->status == Status::Fail);
    Report rev = roundtrip_check_rev(t);
    CHECK(rev.find("roundtrip")->status == Status::Pass);
    CHECK(rev.find("transport")->status == Status::Info);
}
