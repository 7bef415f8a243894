// Matrix-entry expansion on N x N representations and the commutative
// structures induced there by double brackets, double lambda-brackets and
// double Courant-Dorfman structures.
#pragma once

#include <map>
#include <vector>

#include "dcalg/cpoly.hpp"
#include "dcalg/dcd.hpp"
#include "dcalg/double_bracket.hpp"
#include "dcalg/dpva.hpp"
#include "dcalg/lambda_poly.hpp"

namespace dcalg {

constexpr int kMaxMatrixSize = 3;

// (p)_ij for any p, summing over index paths; letters keep their jets.
CPoly matrix_entry(const NCPoly& p, int i, int j, int n);
// Weight-0 and weight-1 front ends with the corresponding checks.
CPoly rep_entry(const NCPoly& p, int i, int j, int n);
CPoly rep_module_entry(const NCPoly& m, int i, int j, int n);

// Sum over terms c p (x) q of c (p)_uj (q)_iv.
CPoly index_convention(const TensorPoly& t, int i, int j, int u, int v, int n);

// Entry symbols of the given generators, row-major per generator.
std::vector<IndexedSym> indexed_symbols(const std::vector<Symbol>& gens, int n);

// d_N: s_ij -> (ds)_ij on weight-0 entries, jet + 1 on weight-1 entries.
CPoly derivative(const CPoly& p, const DerivationTable& der, int n);

// Coordinates of an element linear in E-sort entries.
std::map<IndexedSym, CPoly> module_coordinates(const CPoly& m);

class InducedPoisson {
public:
    InducedPoisson(DoubleBracketTable table, int n);
    int size() const { return n_; }
    std::vector<IndexedSym> symbols() const { return indexed_symbols(table_.generators(), n_); }
    CPoly bracket(const CPoly& p, const CPoly& q) const;

private:
    CPoly on_symbols(const IndexedSym& a, const IndexedSym& b) const;

    DoubleBracketTable table_;
    int n_;
};

InducedPoisson induced_poisson(const DoubleBracketTable& table, int n);
// Antisymmetry and Jacobi on entry symbols; informational unless the table
// passes the double Jacobi check and the antisymmetric skew convention.
Report check_induced_poisson(const DoubleBracketTable& table, int n, const CheckOptions& opts = {});

using CLambdaPoly = BasicLambdaPoly<CPoly>;

class InducedLambda {
public:
    InducedLambda(LambdaBracketTable table, int n);
    int size() const { return n_; }
    std::vector<IndexedSym> symbols() const { return indexed_symbols(table_.generators(), n_); }
    CPoly d(const CPoly& p) const { return derivative(p, table_.derivation(), n_); }
    CLambdaPoly bracket(const CPoly& p, const CPoly& q) const;

    // {da_l b} + l{a_l b}
    CLambdaPoly sesquilinearity_left_residual(const CPoly& a, const CPoly& b) const;
    // {a_l db} - (l + d){a_l b}
    CLambdaPoly sesquilinearity_right_residual(const CPoly& a, const CPoly& b) const;
    // {a_l b} + {b_{-l-d} a}
    CLambdaPoly skew_residual(const CPoly& a, const CPoly& b) const;
    // {a_l {b_m c}} - {b_m {a_l c}} - {{a_l b}_{l+m} c}
    CLambdaPoly jacobi_residual(const CPoly& a, const CPoly& b, const CPoly& c) const;

private:
    CLambdaPoly on_symbols(const IndexedSym& a, const IndexedSym& b) const;
    // (l + d)^k applied to p, d acting on coefficients.
    CLambdaPoly shift_power(const CLambdaPoly& p, int k) const;

    LambdaBracketTable table_;
    int n_;
    mutable std::map<std::pair<IndexedSym, IndexedSym>, CLambdaPoly> cache_;
};

InducedLambda induced_lambda(const LambdaBracketTable& table, int n);
Report check_induced_lambda(const LambdaBracketTable& table, int n, const CheckOptions& opts = {});

class InducedCD {
public:
    InducedCD(DCDStructure s, int n);
    int size() const { return n_; }
    std::vector<IndexedSym> a_symbols() const { return indexed_symbols(s_.a_generators(), n_); }
    std::vector<IndexedSym> e_symbols() const { return indexed_symbols(s_.e_generators(), n_); }

    CPoly d(const CPoly& c) const { return derivative(c, s_.derivation(), n_); }
    CPoly pairing(const CPoly& m1, const CPoly& m2) const;
    // Second argument by the Leibniz axiom; first argument by the rule that
    // axiom and the symmetric-part axiom force together.
    CPoly bracket(const CPoly& m1, const CPoly& m2) const;

private:
    CPoly pairing_symbols(const IndexedSym& e, const IndexedSym& f) const;
    CPoly bracket_symbols(const IndexedSym& e, const IndexedSym& f) const;
    CPoly bracket_right(const IndexedSym& e, const CPoly& m) const;

    DCDStructure s_;
    int n_;
};

InducedCD induced_cd(const DCDStructure& s, int n);
// The six commutative axioms on entry symbols.
Report check_induced_cd(const DCDStructure& s, int n, const CheckOptions& opts = {});

}  // namespace dcalg
