#include "dcalg/diffalg.hpp"

namespace dcalg {

Scalar binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

std::string exponent_suffix(const Exponents& e) {
    std::string s;
    if (e.lambda == 1) s += "*lambda";
    else if (e.lambda > 1) s += "*lambda^" + std::to_string(e.lambda);
    if (e.mu == 1) s += "*mu";
    else if (e.mu > 1) s += "*mu^" + std::to_string(e.mu);
    return s;
}

std::string to_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (e.lambda == 0 && e.mu == 0) out += "(" + to_string(c) + ")";
        else out += "(" + to_string(c) + ")" + exponent_suffix(e);
    }
    return out;
}

void DerivationTable::set(const Symbol& a, const NCPoly& image) {
    if (a.sort() != Sort::A || a.jet() != 0) throw AlgebraError("derivation table keys must be A-sort generators");
    if (!image.is_zero() && image.homogeneous_weight() != 1) {
        throw AlgebraError("derivation image of '" + a.name() + "' must have weight 1");
    }
    for (const auto& [w, c] : image.terms()) {
        for (const auto& s : w.factors()) {
            if (s.jet() != 0) throw AlgebraError("derivation images may only use jet-0 symbols");
        }
    }
    images_[a] = image;
}

const NCPoly& DerivationTable::image(const Symbol& a) const {
    auto it = images_.find(a);
    if (it == images_.end()) throw AlgebraError("A-generator '" + a.name() + "' has no derivation image");
    return it->second;
}

NCPoly d(const Word& w, const DerivationTable& table) {
    NCPoly r;
    const auto& f = w.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        NCPoly di = f[i].sort() == Sort::A ? table.image(f[i]) : NCPoly(Word(f[i].with_jet(f[i].jet() + 1)));
        if (di.is_zero()) continue;
        NCPoly left(w.subword(0, i));
        NCPoly right(w.subword(i + 1, f.size()));
        r += left * di * right;
    }
    return r;
}

NCPoly d(const NCPoly& p, const DerivationTable& table) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r += c * d(w, table);
    return r;
}

NCPoly d_power(const NCPoly& p, int k, const DerivationTable& table) {
    NCPoly r = p;
    for (int i = 0; i < k && !r.is_zero(); ++i) r = d(r, table);
    return r;
}

TensorPoly d_tensor(const TensorPoly& t, const DerivationTable& table) {
    TensorPoly r(t.rank());
    for (const auto& [k, c] : t.terms()) {
        for (int slot = 0; slot < t.rank(); ++slot) {
            NCPoly ds = d(k[slot], table);
            for (const auto& [w, cw] : ds.terms()) {
                TensorKey nk = k;
                nk[slot] = w;
                r.add_term(std::move(nk), c * cw);
            }
        }
    }
    return r;
}

TensorPoly d_tensor_power(const TensorPoly& t, int k, const DerivationTable& table) {
    TensorPoly r = t;
    for (int i = 0; i < k && !r.is_zero(); ++i) r = d_tensor(r, table);
    return r;
}

LambdaPoly lambda_shift(const LambdaPoly& p, Var var, int var_sign, int d_sign, const DerivationTable& table) {
    LambdaPoly r(p.zero());
    for (const auto& [e, c] : p.terms()) {
        int n = var == Var::Lambda ? e.lambda : e.mu;
        TensorPoly dj = c;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) dj = d_tensor(dj, table);
            if (dj.is_zero()) break;
            Scalar coef = binomial(n, j);
            if ((n - j) % 2 == 1 && var_sign < 0) coef = -coef;
            if (j % 2 == 1 && d_sign < 0) coef = -coef;
            Exponents ne = e;
            (var == Var::Lambda ? ne.lambda : ne.mu) = n - j;
            r.add(ne, dj * coef);
        }
    }
    return r;
}

LambdaPoly lambda_shift_total(const LambdaPoly& p, Var var, int sign, const DerivationTable& table) {
    return lambda_shift(p, var, sign, sign, table);
}

LambdaPoly multiply_by_shift(const LambdaPoly& p, int k, int sign, const DerivationTable& table, Var var) {
    LambdaPoly r(p.zero());
    LambdaPoly dj = p;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) dj = dj.map([&](const TensorPoly& c) { return d_tensor(c, table); });
        if (dj.is_zero()) break;
        Scalar coef = binomial(k, j);
        if (sign < 0 && k % 2 == 1) coef = -coef;
        r += coef * (var == Var::Lambda ? dj.shifted(k - j, 0) : dj.shifted(0, k - j));
    }
    return r;
}

namespace {

template <class Emit>
LambdaPoly arrow_expand(const LambdaPoly& p, const NCPoly& b, int out_rank, const DerivationTable& table, Var var,
                        Emit emit) {
    if (p.zero().rank() != 2) throw AlgebraError("arrow operators need rank-2 coefficients");
    LambdaPoly r = zero_lambda(out_rank);
    int max_n = p.degree(var);
    std::vector<NCPoly> powers{b};
    for (int j = 1; j <= max_n; ++j) powers.push_back(d(powers.back(), table));
    for (const auto& [e, c] : p.terms()) {
        int n = var == Var::Lambda ? e.lambda : e.mu;
        for (int j = 0; j <= n; ++j) {
            if (powers[j].is_zero()) break;
            Exponents ne = e;
            (var == Var::Lambda ? ne.lambda : ne.mu) = n - j;
            r.add(ne, emit(c, powers[j]) * binomial(n, j));
        }
    }
    return r;
}

}  // namespace

LambdaPoly arrow_insert(const LambdaPoly& p, const NCPoly& b, ArrowMode mode, const DerivationTable& table, Var var) {
    if (mode == ArrowMode::Star1) {
        return arrow_expand(p, b, 2, table, var, [](const TensorPoly& c, const NCPoly& db) {
            return multiply_slot(c, 0, db, Side::Right);
        });
    }
    return arrow_expand(p, b, 3, table, var,
                        [](const TensorPoly& c, const NCPoly& db) { return otimes1(c, TensorPoly(db)); });
}

LambdaPoly exp_partial_left(const NCPoly& a, const LambdaPoly& p, const DerivationTable& table, Var var) {
    return arrow_expand(p, a, 2, table, var,
                        [](const TensorPoly& c, const NCPoly& da) { return multiply_slot(c, 1, da, Side::Left); });
}

}  // namespace dcalg
