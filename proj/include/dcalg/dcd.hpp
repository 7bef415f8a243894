// Pairings and double Courant-Dorfman brackets on a free bimodule E over a
// free algebra A, the axiom suite, and the auxiliary identity suites.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dcalg/diffalg.hpp"
#include "dcalg/report.hpp"
#include "dcalg/sampling.hpp"

namespace dcalg {

// A free on `a_generators`, E the free A-bimodule on `e_generators`, a
// derivation A -> E, a pairing table and a bracket table on E-generators.
class DCDStructure {
public:
    DCDStructure() = default;
    DCDStructure(std::vector<Symbol> a_generators, std::vector<Symbol> e_generators, DerivationTable derivation);

    // value in A (x) A
    void set_pairing(const Symbol& e, const Symbol& f, const TensorPoly& value);
    // value in E (x) A + A (x) E
    void set_bracket(const Symbol& e, const Symbol& f, const TensorPoly& value);
    TensorPoly pairing(const Symbol& e, const Symbol& f) const;
    TensorPoly bracket(const Symbol& e, const Symbol& f) const;

    const std::vector<Symbol>& a_generators() const { return a_generators_; }
    const std::vector<Symbol>& e_generators() const { return e_generators_; }
    std::vector<Symbol> generators() const;
    const DerivationTable& derivation() const { return derivation_; }
    const std::map<std::pair<Symbol, Symbol>, TensorPoly>& pairing_entries() const { return pairing_; }
    const std::map<std::pair<Symbol, Symbol>, TensorPoly>& bracket_entries() const { return bracket_; }

    friend bool operator==(const DCDStructure& a, const DCDStructure& b) {
        return a.a_generators_ == b.a_generators_ && a.e_generators_ == b.e_generators_ &&
               a.derivation_ == b.derivation_ && a.pairing_ == b.pairing_ && a.bracket_ == b.bracket_;
    }

private:
    void require_e(const Symbol& s) const;

    std::vector<Symbol> a_generators_;
    std::vector<Symbol> e_generators_;
    DerivationTable derivation_;
    std::map<std::pair<Symbol, Symbol>, TensorPoly> pairing_;
    std::map<std::pair<Symbol, Symbol>, TensorPoly> bracket_;
};

// Weight-graded pieces of a rank-2 bracket value.
TensorPoly scalar_part(const TensorPoly& t);  // A (x) A
TensorPoly l_part(const TensorPoly& t);       // E (x) A
TensorPoly r_part(const TensorPoly& t);       // A (x) E

// <<x, y>> for weight-1 x, y: outer structure in y, inner structure in x.
TensorPoly eval_pairing(const NCPoly& x, const NCPoly& y, const DCDStructure& s);

// {{x, y}} for x, y of weight 0 or 1; the result has weight wt(x) + wt(y) - 1.
TensorPoly eval_cd(const NCPoly& x, const NCPoly& y, const DCDStructure& s);

enum class ExtSide { L, R };

// <<e, t>>_L/R and <<t, e>>_L/R for t in E (x) A + A (x) E; rank 3 in A.
TensorPoly pairing_ext(const NCPoly& e, const TensorPoly& t, ExtSide side, const DCDStructure& s);
TensorPoly pairing_ext(const TensorPoly& t, const NCPoly& e, ExtSide side, const DCDStructure& s);

// {{e, t}}_L/R and {{t, f}}_L for t in E (x) A + A (x) E; rank 3 of total weight 1.
TensorPoly cd_ext(const NCPoly& e, const TensorPoly& t, ExtSide side, const DCDStructure& s);
TensorPoly cd_ext(const TensorPoly& t, const NCPoly& f, const DCDStructure& s);

// Residuals of the individual axioms.
TensorPoly pairing_symmetry_residual(const NCPoly& e, const NCPoly& f, const DCDStructure& s);
TensorPoly cd_a_residual(const NCPoly& e, const NCPoly& f, const DCDStructure& s);
TensorPoly cd_b_residual(const NCPoly& a, const NCPoly& e, const DCDStructure& s);
TensorPoly cd_c_residual(const NCPoly& a, const NCPoly& b, const DCDStructure& s);
TensorPoly cd_d_residual(const NCPoly& e, const NCPoly& f, const NCPoly& a, const DCDStructure& s);
TensorPoly cd_e_residual(const NCPoly& e, const NCPoly& f, const NCPoly& a, const DCDStructure& s);
TensorPoly cd_f_residual(const NCPoly& e, const NCPoly& f, const NCPoly& g, const DCDStructure& s);
TensorPoly cd_g_residual(const NCPoly& e, const NCPoly& f, const NCPoly& g, const DCDStructure& s);

// The three slot projections of the bracket Jacobi identity, each expanded
// from the l/r components directly. 0: E(x)A(x)A, 1: A(x)E(x)A, 2: A(x)A(x)E.
TensorPoly cd_f_component_residual(int component, const NCPoly& e, const NCPoly& f, const NCPoly& g,
                                   const DCDStructure& s);

// Consequences of the axioms.
TensorPoly four_term_residual(const NCPoly& e, const NCPoly& f, const NCPoly& g, const DCDStructure& s);
TensorPoly four_term_claim_residual(const NCPoly& e, const NCPoly& f, const NCPoly& g, const DCDStructure& s);
TensorPoly skew_jacobi_residual(int component, const NCPoly& e, const NCPoly& f, const NCPoly& g,
                                const DCDStructure& s);
TensorPoly pairing_derivative_claim_residual(const NCPoly& e, const NCPoly& f, const NCPoly& g,
                                             const DCDStructure& s);

Report check_cd_axioms(const DCDStructure& s, const CheckOptions& opts = {});
// Identity results are informational when the axioms fail.
Report check_appendix_identities(const DCDStructure& s, const CheckOptions& opts = {});

// Random elements of A (no constants) and of E (one E-letter per word).
NCPoly random_a_element(Rng& rng, const DCDStructure& s, int max_len);
NCPoly random_e_element(Rng& rng, const DCDStructure& s, int max_len);

// Small structures with coefficients in {-1, 0, 1} passing every axiom,
// from fixed families plus a seeded lattice search.
struct CorpusOptions {
    std::uint64_t seed = 1;
    int random_candidates = 400;
    int axiom_samples = 16;
};
std::vector<DCDStructure> search_corpus(const CorpusOptions& opts = {});

}  // namespace dcalg
