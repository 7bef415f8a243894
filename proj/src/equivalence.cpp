#include "dcalg/equivalence.hpp"

#include <algorithm>

namespace dcalg {

LambdaBracketTable cd_to_dpva(const DCDStructure& s) {
    const DerivationTable& der = s.derivation();
    LambdaBracketTable table(s.generators(), der, true);
    for (const auto& e : s.e_generators()) {
        NCPoly pe(e);
        for (const auto& f : s.e_generators()) {
            table.set(e, f, LambdaPoly::constant(s.bracket(e, f)) + LambdaPoly::monomial(s.pairing(e, f), 1));
        }
        for (const auto& a : s.a_generators()) {
            NCPoly da = d(NCPoly(a), der);
            table.set(e, a, LambdaPoly::constant(eval_pairing(pe, da, s)));
            table.set(a, e, LambdaPoly::constant(-1 * eval_pairing(da, pe, s)));
        }
    }
    return table;
}

namespace {

std::string entry_name(const Symbol& a, const Symbol& b) {
    return "{{" + to_string(a) + "_l " + to_string(b) + "}}";
}

void require_entry(const LambdaBracketTable& table, const Symbol& a, const Symbol& b, const TensorPoly& expected) {
    LambdaPoly found = table.get(a, b);
    if (!(found == LambdaPoly::constant(expected))) {
        throw AlgebraError("inconsistent mixed-weight entry " + entry_name(a, b) + ": expected " +
                           to_string(expected) + ", found " + to_string(found));
    }
}

}  // namespace

DCDStructure dpva_to_cd(const LambdaBracketTable& table) {
    if (!table.graded()) throw AlgebraError("conversion needs a graded table");
    std::vector<Symbol> a_gens, e_gens;
    for (const auto& g : table.generators()) (g.sort() == Sort::A ? a_gens : e_gens).push_back(g);

    DCDStructure s(a_gens, e_gens, table.derivation());
    for (const auto& e : e_gens) {
        for (const auto& f : e_gens) {
            LambdaPoly v = table.get(e, f);
            int p = v.degree(Var::Lambda);
            if (p >= 2) {
                throw AlgebraError("grading violation: " + entry_name(e, f) + " has lambda-degree " + std::to_string(p));
            }
            TensorPoly pairing = v.coefficient(1);
            TensorPoly bracket = v.coefficient(0);
            if (!(scalar_part(pairing) == pairing)) {
                throw AlgebraError("grading violation: lambda-coefficient of " + entry_name(e, f) + " has weight > 0");
            }
            if (!(l_part(bracket) + r_part(bracket) == bracket)) {
                throw AlgebraError("grading violation: constant term of " + entry_name(e, f) + " is not of weight 1");
            }
            s.set_pairing(e, f, pairing);
            s.set_bracket(e, f, bracket);
        }
    }
    for (const auto& a : a_gens) {
        NCPoly da = d(NCPoly(a), s.derivation());
        for (const auto& e : e_gens) {
            require_entry(table, e, a, eval_pairing(NCPoly(e), da, s));
            require_entry(table, a, e, -1 * eval_pairing(da, NCPoly(e), s));
        }
        for (const auto& b : a_gens) require_entry(table, a, b, TensorPoly(2));
    }
    return s;
}

bool same_table(const LambdaBracketTable& a, const LambdaBracketTable& b) {
    auto ga = a.generators(), gb = b.generators();
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    return ga == gb && a.derivation() == b.derivation() && a.entries() == b.entries();
}

namespace {

std::string joined(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
}

void record_transport(Report& rep, const char* tag, const Report& target, const Report& source) {
    rep.record("transport", tag, target.ok(), "image structure", "failed: " + joined(target.failed_ids()));
    if (!source.ok()) {
        rep.mark_informational("transport");
        rep.note("source axioms failed (" + joined(source.failed_ids()) + "); transport result is informational");
    }
}

}  // namespace

Report roundtrip_check(const DCDStructure& s, const CheckOptions& opts) {
    Report rep("roundtrip-dcd");
    rep.touch("roundtrip", "theorem-CD-DPVA");
    rep.touch("transport", "DPVA");
    LambdaBracketTable image = cd_to_dpva(s);
    try {
        bool equal = dpva_to_cd(image) == s;
        rep.record("roundtrip", "theorem-CD-DPVA", equal, "dcd -> dpva -> dcd", "tables differ");
    } catch (const AlgebraError& err) {
        rep.record("roundtrip", "theorem-CD-DPVA", false, "dcd -> dpva -> dcd", err.what());
    }
    record_transport(rep, "DPVA", check_dpva(image, opts), check_cd_axioms(s, opts));
    return rep;
}

Report roundtrip_check_rev(const LambdaBracketTable& table, const CheckOptions& opts) {
    Report rep("roundtrip-dpva");
    rep.touch("roundtrip", "theorem-CD-DPVA");
    rep.touch("transport", "CD-Definition");
    DCDStructure image;
    try {
        image = dpva_to_cd(table);
    } catch (const AlgebraError& err) {
        rep.record("roundtrip", "theorem-CD-DPVA", false, "dpva -> dcd", err.what());
        return rep;
    }
    rep.record("roundtrip", "theorem-CD-DPVA", same_table(cd_to_dpva(image), table), "dpva -> dcd -> dpva",
               "tables differ");
    record_transport(rep, "CD-Definition", check_cd_axioms(image, opts), check_dpva(table, opts));
    return rep;
}

}  // namespace dcalg
