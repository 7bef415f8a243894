#include "dcalg/dpva.hpp"

#include <algorithm>

namespace dcalg {

LambdaBracketTable::LambdaBracketTable(std::vector<Symbol> generators, DerivationTable derivation, bool graded)
    : generators_(std::move(generators)), derivation_(std::move(derivation)), graded_(graded) {
    for (const auto& g : generators_) {
        if (g.jet() != 0) throw AlgebraError("generators must be jet-0 symbols");
        if (g.sort() == Sort::A && !derivation_.contains(g)) {
            throw AlgebraError("A-generator '" + g.name() + "' has no derivation image");
        }
    }
}

void LambdaBracketTable::require_declared(const Symbol& s) const {
    if (std::find(generators_.begin(), generators_.end(), s) == generators_.end()) {
        throw AlgebraError("missing table entry: '" + s.name() + "' is not a declared generator");
    }
}

void LambdaBracketTable::set(const Symbol& a, const Symbol& b, const LambdaPoly& value) {
    require_declared(a);
    require_declared(b);
    if (value.zero().rank() != 2) throw AlgebraError("lambda-bracket values must have rank-2 coefficients");
    if (value.degree(Var::Mu) != 0) throw AlgebraError("table entries are polynomials in lambda only");
    if (value.is_zero()) entries_.erase({a, b});
    else entries_.insert_or_assign({a, b}, value);
}

LambdaPoly LambdaBracketTable::get(const Symbol& a, const Symbol& b) const {
    require_declared(a);
    require_declared(b);
    auto it = entries_.find({a, b});
    return it == entries_.end() ? zero_lambda(2) : it->second;
}

namespace {

LambdaPoly times_minus_lambda_power(const LambdaPoly& p, int k) {
    LambdaPoly r = p.shifted(k, 0);
    if (k % 2 == 1) r *= Scalar(-1);
    return r;
}

LambdaPoly outer_left(const NCPoly& b, const LambdaPoly& p) {
    return p.map([&](const TensorPoly& t) { return multiply_slot(t, 0, b, Side::Left); });
}

LambdaPoly outer_right(const LambdaPoly& p, const NCPoly& c) {
    return p.map([&](const TensorPoly& t) { return multiply_slot(t, 1, c, Side::Right); });
}

class Evaluator {
public:
    Evaluator(const LambdaBracketTable& table, Strategy strategy) : table_(table), strategy_(strategy) {}

    LambdaPoly words(const Word& a, const Word& b) const {
        if (a.empty() || b.empty()) return zero_lambda(2);
        return strategy_ == Strategy::LeftFirst ? left_first(a, b) : right_first(a, b);
    }

private:
    const DerivationTable& der() const { return table_.derivation(); }

    LambdaPoly left_first(const Word& a, const Word& b) const {
        if (a.empty() || b.empty()) return zero_lambda(2);
        if (a.size() == 1 && a[0].jet() > 0) {
            return times_minus_lambda_power(left_first(Word(a[0].base()), b), a[0].jet());
        }
        if (a.size() > 1) {
            // {{a1 rest_l b}} = {{a1_{l+d} b}}_-> *_1 rest + (e^{d d_l} a1) *_1 {{rest_l b}}
            NCPoly a1(a.subword(0, 1));
            NCPoly rest(a.subword(1, a.size()));
            return arrow_insert(left_first(a.subword(0, 1), b), rest, ArrowMode::Star1, der()) +
                   exp_partial_left(a1, left_first(a.subword(1, a.size()), b), der());
        }
        if (b.size() == 1 && b[0].jet() > 0) {
            return multiply_by_shift(left_first(a, Word(b[0].base())), b[0].jet(), +1, der());
        }
        if (b.size() > 1) {
            // {{a_l b1 rest}} = b1 {{a_l rest}} + {{a_l b1}} rest
            NCPoly b1(b.subword(0, 1));
            NCPoly rest(b.subword(1, b.size()));
            return outer_left(b1, left_first(a, b.subword(1, b.size()))) +
                   outer_right(left_first(a, b.subword(0, 1)), rest);
        }
        return table_.get(a[0], b[0]);
    }

    LambdaPoly right_first(const Word& a, const Word& b) const {
        if (a.empty() || b.empty()) return zero_lambda(2);
        if (b.size() > 1) {
            std::size_t n = b.size();
            NCPoly init(b.subword(0, n - 1));
            NCPoly last(b.subword(n - 1, n));
            return outer_left(init, right_first(a, b.subword(n - 1, n))) +
                   outer_right(right_first(a, b.subword(0, n - 1)), last);
        }
        if (b[0].jet() > 0) {
            return multiply_by_shift(right_first(a, Word(b[0].base())), b[0].jet(), +1, der());
        }
        if (a.size() == 1 && a[0].jet() > 0) {
            return times_minus_lambda_power(right_first(Word(a[0].base()), b), a[0].jet());
        }
        if (a.size() > 1) {
            std::size_t n = a.size();
            NCPoly init(a.subword(0, n - 1));
            NCPoly last(a.subword(n - 1, n));
            return arrow_insert(right_first(a.subword(0, n - 1), b), last, ArrowMode::Star1, der()) +
                   exp_partial_left(init, right_first(a.subword(n - 1, n), b), der());
        }
        return table_.get(a[0], b[0]);
    }

    const LambdaBracketTable& table_;
    Strategy strategy_;
};

void enforce_cap(const LambdaPoly& p, int cap) {
    if (p.degree(Var::Lambda) > cap || p.degree(Var::Mu) > cap) {
        throw AlgebraError("lambda-degree cap of " + std::to_string(cap) + " exceeded");
    }
}

}  // namespace

LambdaPoly eval_lb(const NCPoly& p, const NCPoly& q, const LambdaBracketTable& table, Strategy strategy,
                   int lambda_cap) {
    Evaluator ev(table, strategy);
    LambdaPoly r = zero_lambda(2);
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) r += (cp * cq) * ev.words(wp, wq);
    }
    enforce_cap(r, lambda_cap);
    return r;
}

LambdaPoly lb_ext(const NCPoly& element, const TensorPoly& t, Extension which, const LambdaBracketTable& table,
                  int lambda_cap) {
    if (t.rank() != 2) throw AlgebraError("lb_ext needs a rank-2 tensor argument");
    LambdaPoly r = zero_lambda(3);
    for (const auto& [k, c] : t.terms()) {
        NCPoly first(k[0]), second(k[1]);
        LambdaPoly piece = zero_lambda(3);
        switch (which) {
            case Extension::L:
                piece = eval_lb(element, first, table, Strategy::LeftFirst, lambda_cap)
                            .map([&](const TensorPoly& v) { return tensor(v, TensorPoly(second)); });
                break;
            case Extension::R:
                piece = eval_lb(element, second, table, Strategy::LeftFirst, lambda_cap)
                            .map([&](const TensorPoly& v) { return tensor(TensorPoly(first), v); });
                break;
            case Extension::FirstL:
                piece = arrow_insert(eval_lb(first, element, table, Strategy::LeftFirst, lambda_cap), second,
                                     ArrowMode::Otimes1, table.derivation());
                break;
        }
        r += c * piece;
    }
    enforce_cap(r, lambda_cap);
    return r;
}

LambdaPoly jacobi_residual(const NCPoly& a, const NCPoly& b, const NCPoly& c, const LambdaBracketTable& table,
                           int cap) {
    const LambdaPoly bc = eval_lb(b, c, table, Strategy::LeftFirst, cap);
    const LambdaPoly ac = eval_lb(a, c, table, Strategy::LeftFirst, cap);
    const LambdaPoly ab = eval_lb(a, b, table, Strategy::LeftFirst, cap);
    LambdaPoly lhs = zero_lambda(3);
    for (const auto& [e, coeff] : bc.terms()) {
        lhs += lb_ext(a, coeff, Extension::L, table, cap).shifted(0, e.lambda);
    }
    LambdaPoly right = zero_lambda(3);
    for (const auto& [e, coeff] : ac.terms()) {
        right += lambda_to_mu(lb_ext(b, coeff, Extension::R, table, cap)).shifted(e.lambda, 0);
    }
    LambdaPoly first = zero_lambda(3);
    for (const auto& [e, coeff] : ab.terms()) {
        first += substitute_lambda_plus_mu(lb_ext(c, coeff, Extension::FirstL, table, cap)).shifted(e.lambda, 0);
    }
    LambdaPoly r = lhs - right - first;
    enforce_cap(r, cap);
    return r;
}

namespace {

Scalar factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(r);
}

}  // namespace

LambdaPoly jacobi_residual_expanded(const NCPoly& a, const NCPoly& b, const NCPoly& c, const LambdaBracketTable& table,
                                    int cap) {
    const DerivationTable& der = table.derivation();
    auto bracket = [&](const NCPoly& x, const NCPoly& y) { return eval_lb(x, y, table, Strategy::LeftFirst, cap); };
    LambdaPoly r = zero_lambda(3);
    // (a_p (b_q c)')' (x) (a_p (b_q c)')'' (x) (b_q c)''  l^p m^q
    const LambdaPoly bc_all = bracket(b, c);
    for (const auto& [eq, bc] : bc_all.terms()) {
        for (const auto& [k, coef] : bc.terms()) {
            const LambdaPoly outer = bracket(a, NCPoly(k[0]));
            for (const auto& [ep, inner] : outer.terms()) {
                for (const auto& [ki, ci] : inner.terms()) {
                    TensorPoly t(3);
                    t.add_term(TensorKey{ki[0], ki[1], k[1]}, coef * ci);
                    r.add(ep.lambda, eq.lambda, t);
                }
            }
        }
    }
    // - (a_p c)' (x) (b_q (a_p c)'')' (x) (b_q (a_p c)'')''  l^p m^q
    const LambdaPoly ac_all = bracket(a, c);
    for (const auto& [ep, ac] : ac_all.terms()) {
        for (const auto& [k, coef] : ac.terms()) {
            const LambdaPoly outer = bracket(b, NCPoly(k[1]));
            for (const auto& [eq, inner] : outer.terms()) {
                for (const auto& [ki, ci] : inner.terms()) {
                    TensorPoly t(3);
                    t.add_term(TensorKey{k[0], ki[0], ki[1]}, -coef * ci);
                    r.add(ep.lambda, eq.lambda, t);
                }
            }
        }
    }
    // - ((a_p b)'_q c)' (x) (l+m+d)^q (a_p b)'' (x) ((a_p b)'_q c)''  l^p
    const LambdaPoly ab_all = bracket(a, b);
    for (const auto& [ep, ab] : ab_all.terms()) {
        for (const auto& [k, coef] : ab.terms()) {
            const LambdaPoly outer = bracket(NCPoly(k[0]), c);
            for (const auto& [eq, inner] : outer.terms()) {
                const int q = eq.lambda;
                std::vector<NCPoly> dpow{NCPoly(k[1])};
                for (int j = 1; j <= q; ++j) dpow.push_back(d(dpow.back(), der));
                for (int i = 0; i <= q; ++i) {
                    for (int j = 0; i + j <= q; ++j) {
                        int m = q - i - j;
                        Scalar multinom = factorial(q) / (factorial(i) * factorial(j) * factorial(m));
                        for (const auto& [ki, ci] : inner.terms()) {
                            for (const auto& [w, cw] : dpow[m].terms()) {
                                TensorPoly t(3);
                                t.add_term(TensorKey{ki[0], w, ki[1]}, -coef * ci * cw * multinom);
                                r.add(ep.lambda + i, j, t);
                            }
                        }
                    }
                }
            }
        }
    }
    enforce_cap(r, cap);
    return r;
}

LambdaPoly skew_residual(const NCPoly& a, const NCPoly& b, const LambdaBracketTable& table, int cap) {
    LambdaPoly reflected = lambda_shift_total(eval_lb(b, a, table, Strategy::LeftFirst, cap), Var::Lambda, -1,
                                              table.derivation());
    return eval_lb(a, b, table, Strategy::LeftFirst, cap) + reflected.map([](const TensorPoly& t) { return swap(t); });
}

std::vector<Symbol> sampling_alphabet(const std::vector<Symbol>& generators) {
    std::vector<Symbol> out = generators;
    for (const auto& g : generators) {
        if (g.sort() == Sort::E) out.push_back(g.with_jet(1));
    }
    return out;
}

Word random_differential_word(Rng& rng, const std::vector<Symbol>& generators, int max_len) {
    std::vector<Symbol> jets;
    for (const auto& g : generators) {
        if (g.sort() == Sort::E) jets.push_back(g.with_jet(1));
    }
    int len = rng.between(1, std::max(1, max_len));
    std::vector<Symbol> f;
    bool jet_used = false;
    for (int i = 0; i < len; ++i) {
        if (!jet_used && !jets.empty() && rng.below(4) == 0) {
            f.push_back(rng.pick(jets));
            jet_used = true;
        } else {
            f.push_back(rng.pick(generators));
        }
    }
    return Word(f);
}

namespace {

std::string witness2(const NCPoly& a, const NCPoly& b) { return "(" + to_string(a) + ", " + to_string(b) + ")"; }
std::string witness3(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
}

template <class Fn>
void for_pairs(const LambdaBracketTable& table, const CheckOptions& opts, std::uint64_t salt, Fn fn) {
    const auto& gens = table.generators();
    for (const auto& a : gens) {
        for (const auto& b : gens) fn(NCPoly(a), NCPoly(b));
    }
    if (gens.empty()) return;
    Rng rng(opts.seed ^ salt);
    for (int s = 0; s < opts.samples; ++s) {
        NCPoly a(random_differential_word(rng, gens, opts.max_degree));
        NCPoly b(random_differential_word(rng, gens, opts.max_degree));
        fn(a, b);
    }
}

template <class Fn>
void for_triples(const LambdaBracketTable& table, const CheckOptions& opts, std::uint64_t salt, Fn fn) {
    const auto& gens = table.generators();
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            for (const auto& c : gens) fn(NCPoly(a), NCPoly(b), NCPoly(c));
        }
    }
    if (gens.empty()) return;
    Rng rng(opts.seed ^ salt);
    for (int s = 0; s < opts.samples; ++s) {
        NCPoly a(random_differential_word(rng, gens, opts.max_degree));
        NCPoly b(random_differential_word(rng, gens, opts.max_degree));
        NCPoly c(random_differential_word(rng, gens, opts.max_degree));
        fn(a, b, c);
    }
}

// Violations of the weight rule i + j - p - 1 for the lambda^p coefficient.
bool weights_ok(const LambdaPoly& value, int wa, int wb) {
    for (const auto& [e, coeff] : value.terms()) {
        int expected = wa + wb - e.lambda - 1;
        if (coeff.homogeneous_weight() != expected) return false;
    }
    return true;
}

}  // namespace

Report check_skew(const LambdaBracketTable& table, const CheckOptions& opts) {
    Report rep("dpva-skew");
    rep.touch("skew", "vertex-skew");
    for_pairs(table, opts, 0x51, [&](const NCPoly& a, const NCPoly& b) {
        LambdaPoly r = skew_residual(a, b, table, opts.lambda_cap);
        rep.record("skew", "vertex-skew", r.is_zero(), witness2(a, b), to_string(r));
    });
    return rep;
}

Report check_jacobi(const LambdaBracketTable& table, const CheckOptions& opts) {
    Report rep("dpva-jacobi");
    rep.touch("jacobi", "Jacobi-vertex");
    rep.touch("jacobi-expanded-agreement", "eq-Jacobi-vertex-tensor");
    for_triples(table, opts, 0x7a, [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
        LambdaPoly direct = jacobi_residual(a, b, c, table, opts.lambda_cap);
        LambdaPoly expanded = jacobi_residual_expanded(a, b, c, table, opts.lambda_cap);
        std::string w = witness3(a, b, c);
        rep.record("jacobi", "Jacobi-vertex", direct.is_zero(), w, to_string(direct));
        rep.record("jacobi-expanded-agreement", "eq-Jacobi-vertex-tensor", direct == expanded, w,
                   to_string(direct - expanded));
    });
    return rep;
}

Report check_dpva(const LambdaBracketTable& table, const CheckOptions& opts) {
    Report rep("dpva");
    const DerivationTable& der = table.derivation();
    const int cap = opts.lambda_cap;
    rep.touch("sesquilinearity-left", "sesquilinearity-vertex.a");
    rep.touch("sesquilinearity-right", "sesquilinearity-vertex.b");
    rep.touch("reduction-order", "Leibniz-vertex");
    for_pairs(table, opts, 0x5e, [&](const NCPoly& a, const NCPoly& b) {
        std::string w = witness2(a, b);
        LambdaPoly base = eval_lb(a, b, table, Strategy::LeftFirst, cap);
        LambdaPoly left = eval_lb(d(a, der), b, table, Strategy::LeftFirst, cap) + base.shifted(1, 0);
        rep.record("sesquilinearity-left", "sesquilinearity-vertex.a", left.is_zero(), w, to_string(left));
        LambdaPoly right = eval_lb(a, d(b, der), table, Strategy::LeftFirst, cap) - multiply_by_shift(base, 1, +1, der);
        rep.record("sesquilinearity-right", "sesquilinearity-vertex.b", right.is_zero(), w, to_string(right));
        LambdaPoly order = base - eval_lb(a, b, table, Strategy::RightFirst, cap);
        rep.record("reduction-order", "Leibniz-vertex", order.is_zero(), w, to_string(order));
        if (table.graded()) {
            int wa = a.homogeneous_weight(), wb = b.homogeneous_weight();
            rep.record("weight", "weight-grading", weights_ok(base, wa, wb), w, to_string(base));
        }
    });
    rep.merge(check_skew(table, opts));
    rep.merge(check_jacobi(table, opts));
    return rep;
}

}  // namespace dcalg
