// Commutative polynomials in matrix-entry symbols s_ij.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcalg/ncpoly.hpp"

namespace dcalg {

// Entry (row, col) of a generator or of one of its jets; indices are 1-based.
class IndexedSym {
public:
    IndexedSym(Symbol base, int row, int col);

    const Symbol& base() const { return base_; }
    int row() const { return row_; }
    int col() const { return col_; }
    Sort sort() const { return base_.sort(); }

    friend bool operator<(const IndexedSym& a, const IndexedSym& b);
    friend bool operator==(const IndexedSym& a, const IndexedSym& b) {
        return a.base_ == b.base_ && a.row_ == b.row_ && a.col_ == b.col_;
    }

private:
    Symbol base_;
    int row_;
    int col_;
};

std::string to_string(const IndexedSym& s);

class CPoly {
public:
    using Monomial = std::vector<IndexedSym>;  // sorted, repeats allowed

    CPoly() = default;
    explicit CPoly(const Scalar& c);
    explicit CPoly(const IndexedSym& s);
    static CPoly delta(int i, int j) { return CPoly(Scalar(i == j ? 1 : 0)); }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(Monomial m, const Scalar& c);
    // Number of E-sort factors if every monomial has the same count, -1 otherwise, 0 for zero.
    int homogeneous_e_degree() const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const Scalar& c);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(CPoly a, const Scalar& c) { return a *= c; }
    friend CPoly operator*(const Scalar& c, CPoly a) { return a *= c; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Scalar> terms_;
};

CPoly operator*(const CPoly& a, const CPoly& b);
std::string to_string(const CPoly& p);

// Calls fn(factor, rest, coefficient) for every factor position of every monomial.
template <class Fn>
void for_each_factor(const CPoly& p, Fn fn) {
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k > 0 && m[k] == m[k - 1]) continue;  // repeated factor: counted via multiplicity
            std::size_t mult = 1;
            while (k + mult < m.size() && m[k + mult] == m[k]) ++mult;
            CPoly::Monomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            CPoly r;
            r.add(std::move(rest), c * Scalar(static_cast<long>(mult)));
            fn(m[k], r);
        }
    }
}

}  // namespace dcalg
