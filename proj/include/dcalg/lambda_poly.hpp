// Polynomials in two formal variables (lambda, mu) with coefficients in an
// additive group C (tensors or commutative polynomials).
#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "dcalg/ncpoly.hpp"

namespace dcalg {

struct Exponents {
    int lambda = 0;
    int mu = 0;
    friend bool operator<(const Exponents& a, const Exponents& b) {
        return std::pair(a.lambda, a.mu) < std::pair(b.lambda, b.mu);
    }
    friend bool operator==(const Exponents& a, const Exponents& b) {
        return a.lambda == b.lambda && a.mu == b.mu;
    }
};

enum class Var { Lambda, Mu };

template <class C>
class BasicLambdaPoly {
public:
    using Terms = std::map<Exponents, C>;

    explicit BasicLambdaPoly(C zero) : zero_(std::move(zero)) {}

    static BasicLambdaPoly constant(const C& c) {
        BasicLambdaPoly p(c * Scalar(0));
        p.add(0, 0, c);
        return p;
    }
    static BasicLambdaPoly monomial(const C& c, int lam, int mu = 0) {
        BasicLambdaPoly p(c * Scalar(0));
        p.add(lam, mu, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    const C& zero() const { return zero_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int lam, int mu, const C& c) { add(Exponents{lam, mu}, c); }
    void add(const Exponents& e, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coefficient(int lam, int mu = 0) const {
        auto it = terms_.find(Exponents{lam, mu});
        return it == terms_.end() ? zero_ : it->second;
    }

    int degree(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, v == Var::Lambda ? e.lambda : e.mu);
        return d;
    }

    // Multiplies by lambda^lam mu^mu.
    BasicLambdaPoly shifted(int lam, int mu = 0) const {
        BasicLambdaPoly r(zero_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.lambda + lam, e.mu + mu}, c);
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using D = decltype(f(zero_));
        BasicLambdaPoly<D> r(f(zero_));
        for (const auto& [e, c] : terms_) r.add(e, f(c));
        return r;
    }

    BasicLambdaPoly& operator+=(const BasicLambdaPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    BasicLambdaPoly& operator-=(const BasicLambdaPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c * Scalar(-1));
        return *this;
    }
    BasicLambdaPoly& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend BasicLambdaPoly operator+(BasicLambdaPoly a, const BasicLambdaPoly& b) { return a += b; }
    friend BasicLambdaPoly operator-(BasicLambdaPoly a, const BasicLambdaPoly& b) { return a -= b; }
    friend BasicLambdaPoly operator-(BasicLambdaPoly a) { return a *= Scalar(-1); }
    friend BasicLambdaPoly operator*(const Scalar& s, BasicLambdaPoly a) { return a *= s; }
    friend bool operator==(const BasicLambdaPoly& a, const BasicLambdaPoly& b) { return a.terms_ == b.terms_; }

private:
    C zero_;
    Terms terms_;
};

using LambdaPoly = BasicLambdaPoly<TensorPoly>;

inline TensorPoly operator*(TensorPoly a, const Scalar& c) { return a *= c; }

inline LambdaPoly zero_lambda(int rank) { return LambdaPoly(TensorPoly(rank)); }

// Binomial coefficient as an exact rational.
Scalar binomial(int n, int k);

// lambda^k -> (lambda + mu)^k on a polynomial with no mu.
template <class C>
BasicLambdaPoly<C> substitute_lambda_plus_mu(const BasicLambdaPoly<C>& p) {
    BasicLambdaPoly<C> r(p.zero());
    for (const auto& [e, c] : p.terms()) {
        if (e.mu != 0) throw AlgebraError("substitute_lambda_plus_mu needs a polynomial in lambda only");
        for (int i = 0; i <= e.lambda; ++i) r.add(i, e.lambda - i, c * binomial(e.lambda, i));
    }
    return r;
}

// Renames lambda to mu on a polynomial with no mu.
template <class C>
BasicLambdaPoly<C> lambda_to_mu(const BasicLambdaPoly<C>& p) {
    BasicLambdaPoly<C> r(p.zero());
    for (const auto& [e, c] : p.terms()) {
        if (e.mu != 0) throw AlgebraError("lambda_to_mu needs a polynomial in lambda only");
        r.add(0, e.lambda, c);
    }
    return r;
}

std::string to_string(const LambdaPoly& p);
std::string exponent_suffix(const Exponents& e);

}  // namespace dcalg
