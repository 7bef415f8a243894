// Small structures shared by the dcd, equivalence and rep tests.
#pragma once

#include "dcalg/dcd.hpp"
#include "helpers.hpp"

namespace testing_helpers {

// A = k<x>, E on u, v, dx = u, <<u,v>> = <<v,u>> = 1 (x) 1, zero bracket.
inline DCDStructure hyp(bool bad = false) {
    DerivationTable der;
    der.set(A("x"), P(E("u")));
    DCDStructure s({A("x")}, {E("u"), E("v")}, der);
    s.set_pairing(E("u"), E("v"), T2(one(), one()));
    s.set_pairing(E("v"), E("u"), T2(one(), one()));
    if (bad) s.set_pairing(E("u"), E("u"), T2(one(), one()));
    return s;
}

inline DCDStructure zero_structure() {
    DerivationTable der;
    der.declare(A("x"));
    return DCDStructure({A("x")}, {E("u"), E("v")}, der);
}

// One weight-1 generator over the ground field with <<e,e>> = 1 (x) 1.
inline DCDStructure single() {
    DCDStructure s({}, {E("e")}, DerivationTable{});
    s.set_pairing(E("e"), E("e"), T2(one(), one()));
    return s;
}

// Nonzero bracket: {{u,u}} = u (x) 1 - 1 (x) u over the ground field.
inline DCDStructure antisymmetric_bracket() {
    DCDStructure s({}, {E("u")}, DerivationTable{});
    NCPoly u = P(E("u"));
    s.set_pairing(E("u"), E("u"), T2(one(), one()));
    s.set_bracket(E("u"), E("u"), T2(u, one()) - T2(one(), u));
    return s;
}

// Arbitrary (not axiom-satisfying) structure with brackets touching x.
inline DCDStructure generic_structure() {
    DerivationTable der;
    NCPoly x = P(A("x")), u = P(E("u")), v = P(E("v"));
    der.set(A("x"), u - x * v);
    DCDStructure s({A("x")}, {E("u"), E("v")}, der);
    s.set_pairing(E("u"), E("u"), T2(x, one()) + T2(one(), x));
    s.set_pairing(E("u"), E("v"), T2(one(), x) - T2(one(), one()));
    s.set_pairing(E("v"), E("u"), T2(x, one()) - T2(one(), one()));
    s.set_bracket(E("u"), E("v"), T2(u * x, one()) - T2(x, v));
    s.set_bracket(E("v"), E("u"), T2(one(), u) + 2 * T2(v, x));
    s.set_bracket(E("v"), E("v"), T2(x * v, x));
    return s;
}

}  // namespace testing_helpers
