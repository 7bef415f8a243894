// Translation between double Courant-Dorfman structures and graded double
// lambda-bracket tables, and the round-trip suites.
#pragma once

#include "dcalg/dcd.hpp"
#include "dcalg/dpva.hpp"

namespace dcalg {

// {{e_l f}} = {{e,f}} + <<e,f>> l, {{e_l a}} = <<e, da>>, {{a_l e}} = -<<da, e>>, {{a_l b}} = 0.
LambdaBracketTable cd_to_dpva(const DCDStructure& s);

// Inverse reading of a graded table. Throws AlgebraError on a lambda-degree
// or weight violation, and when a mixed-weight entry disagrees with the
// value forced by the pairing.
DCDStructure dpva_to_cd(const LambdaBracketTable& table);

// Table equality up to the order generators were declared in.
bool same_table(const LambdaBracketTable& a, const LambdaBracketTable& b);

// Round trip and axiom transport starting from either side. Transport
// results are informational when the starting structure fails its own axioms.
Report roundtrip_check(const DCDStructure& s, const CheckOptions& opts = {});
Report roundtrip_check_rev(const LambdaBracketTable& table, const CheckOptions& opts = {});

}  // namespace dcalg
