// Double brackets on a free associative algebra and the double Poisson checks.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dcalg/ncpoly.hpp"
#include "dcalg/report.hpp"
#include "dcalg/sampling.hpp"

namespace dcalg {

class DoubleBracketTable {
public:
    explicit DoubleBracketTable(std::vector<Symbol> generators = {});

    // value must be rank 2 with only A-sort jet-0 symbols.
    void set(const Symbol& a, const Symbol& b, const TensorPoly& value);
    // Zero when no entry was set; throws for undeclared generators.
    TensorPoly get(const Symbol& a, const Symbol& b) const;
    const std::vector<Symbol>& generators() const { return generators_; }
    const std::map<std::pair<Symbol, Symbol>, TensorPoly>& entries() const { return entries_; }

private:
    void require_declared(const Symbol& s) const;

    std::vector<Symbol> generators_;
    std::map<std::pair<Symbol, Symbol>, TensorPoly> entries_;
};

TensorPoly eval_bb(const NCPoly& p, const NCPoly& q, const DoubleBracketTable& table);

// {{a, b1 (x) b2}}_L = {{a,b1}} (x) b2 and {{a, b1 (x) b2}}_R = b1 (x) {{a,b2}}.
TensorPoly bb_ext_L(const NCPoly& a, const TensorPoly& t, const DoubleBracketTable& table);
TensorPoly bb_ext_R(const NCPoly& a, const TensorPoly& t, const DoubleBracketTable& table);
// First-argument variants: {{b1 (x) b2, a}}_L = {{b1,a}} (x)_1 b2, {{b1 (x) b2, a}}_R = b1 (x)_1 {{b2,a}}.
TensorPoly bb_ext_first_L(const TensorPoly& t, const NCPoly& a, const DoubleBracketTable& table);
TensorPoly bb_ext_first_R(const TensorPoly& t, const NCPoly& a, const DoubleBracketTable& table);

// {{a,{{b,c}}}}_L - {{{{a,b}},c}}_L - {{b,{{a,c}}}}_R
TensorPoly double_jacobi_residual(const NCPoly& a, const NCPoly& b, const NCPoly& c, const DoubleBracketTable& table);
// {{a,b}} - eps {{b,a}}^sigma, eps = +1 (Paper) or -1 (VdB)
TensorPoly skew_residual(const NCPoly& a, const NCPoly& b, const DoubleBracketTable& table, Convention conv);

Report check_cyclic_skew(const DoubleBracketTable& table, const CheckOptions& opts = {});
Report check_double_jacobi(const DoubleBracketTable& table, const CheckOptions& opts = {});

}  // namespace dcalg
