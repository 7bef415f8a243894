// The derivation on the free differential algebra and the (lambda + d) calculus.
#pragma once

#include <map>
#include <vector>

#include "dcalg/lambda_poly.hpp"
#include "dcalg/ncpoly.hpp"

namespace dcalg {

// Images of the A-sort generators under d. E-sort symbols are free: d raises the jet.
class DerivationTable {
public:
    DerivationTable() = default;

    // image must be zero or homogeneous of weight 1 built from jet-0 symbols.
    void set(const Symbol& a, const NCPoly& image);
    void declare(const Symbol& a) { set(a, NCPoly()); }
    const NCPoly& image(const Symbol& a) const;
    bool contains(const Symbol& a) const { return images_.count(a) != 0; }
    const std::map<Symbol, NCPoly>& entries() const { return images_; }
    friend bool operator==(const DerivationTable& a, const DerivationTable& b) { return a.images_ == b.images_; }

private:
    std::map<Symbol, NCPoly> images_;
};

NCPoly d(const NCPoly& p, const DerivationTable& table);
NCPoly d(const Word& w, const DerivationTable& table);
NCPoly d_power(const NCPoly& p, int k, const DerivationTable& table);
TensorPoly d_tensor(const TensorPoly& t, const DerivationTable& table);
TensorPoly d_tensor_power(const TensorPoly& t, int k, const DerivationTable& table);

// var -> var_sign * var + d_sign * d, with d acting on whole coefficients.
LambdaPoly lambda_shift(const LambdaPoly& p, Var var, int var_sign, int d_sign, const DerivationTable& table);
// var -> sign * (var + d)
LambdaPoly lambda_shift_total(const LambdaPoly& p, Var var, int sign, const DerivationTable& table);

// Multiplies by (sign * (var + d))^k, d acting on the coefficients.
LambdaPoly multiply_by_shift(const LambdaPoly& p, int k, int sign, const DerivationTable& table, Var var = Var::Lambda);

enum class ArrowMode { Star1, Otimes1 };

// P(lambda + d) with d acting on b, b inserted after slot 1 (Star1) or between the slots (Otimes1).
LambdaPoly arrow_insert(const LambdaPoly& p, const NCPoly& b, ArrowMode mode, const DerivationTable& table,
                        Var var = Var::Lambda);

// (e^{d d_lambda} a) *_1 P: d^j a multiplied into slot 2 from the left.
LambdaPoly exp_partial_left(const NCPoly& a, const LambdaPoly& p, const DerivationTable& table,
                            Var var = Var::Lambda);

}  // namespace dcalg
