// Double lambda-brackets on free differential algebras and their axiom checks.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dcalg/diffalg.hpp"
#include "dcalg/report.hpp"
#include "dcalg/sampling.hpp"

namespace dcalg {

class LambdaBracketTable {
public:
    LambdaBracketTable() = default;
    LambdaBracketTable(std::vector<Symbol> generators, DerivationTable derivation, bool graded = false);

    // value: rank-2 coefficients, polynomial in lambda only.
    void set(const Symbol& a, const Symbol& b, const LambdaPoly& value);
    // Zero for declared pairs without an entry; throws for undeclared generators.
    LambdaPoly get(const Symbol& a, const Symbol& b) const;

    const std::vector<Symbol>& generators() const { return generators_; }
    const DerivationTable& derivation() const { return derivation_; }
    bool graded() const { return graded_; }
    void set_graded(bool g) { graded_ = g; }
    const std::map<std::pair<Symbol, Symbol>, LambdaPoly>& entries() const { return entries_; }
    friend bool operator==(const LambdaBracketTable& a, const LambdaBracketTable& b) {
        return a.generators_ == b.generators_ && a.derivation_ == b.derivation_ && a.entries_ == b.entries_;
    }

private:
    void require_declared(const Symbol& s) const;

    std::vector<Symbol> generators_;
    DerivationTable derivation_;
    bool graded_ = false;
    std::map<std::pair<Symbol, Symbol>, LambdaPoly> entries_;
};

// LeftFirst: left jets, left products (split after the first factor), right jets, right products.
// RightFirst: the mirror order, splitting products before their last factor.
enum class Strategy { LeftFirst, RightFirst };

LambdaPoly eval_lb(const NCPoly& p, const NCPoly& q, const LambdaBracketTable& table,
                   Strategy strategy = Strategy::LeftFirst, int lambda_cap = 8);

enum class Extension { L, R, FirstL };

// L: {{a_l (b (x) c)}}_L = {{a_l b}} (x) c;  R: b (x) {{a_l c}};
// FirstL: {{(a (x) b)_l c}}_L = {{a_{l+d} c}}_-> (x)_1 b, with `a` the rank-2 tensor and `b` the element.
LambdaPoly lb_ext(const NCPoly& element, const TensorPoly& t, Extension which, const LambdaBracketTable& table,
                  int lambda_cap = 8);

// {{a_l {{b_m c}}}}_L - {{b_m {{a_l c}}}}_R - {{ {{a_l b}}_{l+m} c}}_L
LambdaPoly jacobi_residual(const NCPoly& a, const NCPoly& b, const NCPoly& c, const LambdaBracketTable& table,
                           int lambda_cap = 8);
// Same identity, built from coefficient loops with a multinomial (l+m+d)^q middle-slot action.
LambdaPoly jacobi_residual_expanded(const NCPoly& a, const NCPoly& b, const NCPoly& c, const LambdaBracketTable& table,
                                    int lambda_cap = 8);
// {{a_l b}} + {{b_{-l-d} a}}^sigma
LambdaPoly skew_residual(const NCPoly& a, const NCPoly& b, const LambdaBracketTable& table, int lambda_cap = 8);

Report check_skew(const LambdaBracketTable& table, const CheckOptions& opts = {});
Report check_jacobi(const LambdaBracketTable& table, const CheckOptions& opts = {});
Report check_dpva(const LambdaBracketTable& table, const CheckOptions& opts = {});

// Alphabet used for random monomials: generators plus first jets of E-sort generators.
std::vector<Symbol> sampling_alphabet(const std::vector<Symbol>& generators);
// Random word with at most one jet symbol, length in [1, max_len].
Word random_differential_word(Rng& rng, const std::vector<Symbol>& generators, int max_len);

}  // namespace dcalg
