#include "dcalg/double_bracket.hpp"

#include <algorithm>

namespace dcalg {

DoubleBracketTable::DoubleBracketTable(std::vector<Symbol> generators) : generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.sort() != Sort::A || g.jet() != 0) throw AlgebraError("double brackets live on A-sort generators");
    }
}

void DoubleBracketTable::require_declared(const Symbol& s) const {
    if (std::find(generators_.begin(), generators_.end(), s) == generators_.end()) {
        throw AlgebraError("no table entry for undeclared generator '" + s.name() + "'");
    }
}

void DoubleBracketTable::set(const Symbol& a, const Symbol& b, const TensorPoly& value) {
    require_declared(a);
    require_declared(b);
    if (value.rank() != 2) throw AlgebraError("double bracket values must have rank 2");
    for (const auto& [k, c] : value.terms()) {
        for (const auto& w : k) {
            for (const auto& s : w.factors()) {
                if (s.sort() != Sort::A || s.jet() != 0) throw AlgebraError("double bracket values must be in A (x) A");
            }
        }
    }
    if (value.is_zero()) entries_.erase({a, b});
    else entries_[{a, b}] = value;
}

TensorPoly DoubleBracketTable::get(const Symbol& a, const Symbol& b) const {
    require_declared(a);
    require_declared(b);
    auto it = entries_.find({a, b});
    return it == entries_.end() ? TensorPoly(2) : it->second;
}

namespace {

TensorPoly bracket_words(const Word& a, const Word& b, const DoubleBracketTable& table) {
    if (a.empty() || b.empty()) return TensorPoly(2);
    if (b.size() > 1) {
        // {{a, b1 rest}} = b1 {{a, rest}} + {{a, b1}} rest
        Word b1 = b.subword(0, 1);
        Word rest = b.subword(1, b.size());
        return multiply_slot(bracket_words(a, rest, table), 0, NCPoly(b1), Side::Left) +
               multiply_slot(bracket_words(a, b1, table), 1, NCPoly(rest), Side::Right);
    }
    if (a.size() > 1) {
        // {{a1 rest, c}} = a1 * {{rest, c}} + {{a1, c}} * rest  (inner structure)
        Word a1 = a.subword(0, 1);
        Word rest = a.subword(1, a.size());
        return multiply_slot(bracket_words(rest, b, table), 1, NCPoly(a1), Side::Left) +
               multiply_slot(bracket_words(a1, b, table), 0, NCPoly(rest), Side::Right);
    }
    return table.get(a[0], b[0]);
}

void require_weight_zero(const NCPoly& p) {
    if (p.max_weight() > 0) throw AlgebraError("double brackets take weight-0 arguments");
}

}  // namespace

TensorPoly eval_bb(const NCPoly& p, const NCPoly& q, const DoubleBracketTable& table) {
    require_weight_zero(p);
    require_weight_zero(q);
    TensorPoly r(2);
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) r += (cp * cq) * bracket_words(wp, wq, table);
    }
    return r;
}

namespace {

void require_rank(const TensorPoly& t, int rank) {
    if (t.rank() != rank) throw AlgebraError("rank mismatch in bracket extension");
}

}  // namespace

TensorPoly bb_ext_L(const NCPoly& a, const TensorPoly& t, const DoubleBracketTable& table) {
    require_rank(t, 2);
    TensorPoly r(3);
    for (const auto& [k, c] : t.terms()) r += c * tensor(eval_bb(a, NCPoly(k[0]), table), TensorPoly(NCPoly(k[1])));
    return r;
}

TensorPoly bb_ext_R(const NCPoly& a, const TensorPoly& t, const DoubleBracketTable& table) {
    require_rank(t, 2);
    TensorPoly r(3);
    for (const auto& [k, c] : t.terms()) r += c * tensor(TensorPoly(NCPoly(k[0])), eval_bb(a, NCPoly(k[1]), table));
    return r;
}

TensorPoly bb_ext_first_L(const TensorPoly& t, const NCPoly& a, const DoubleBracketTable& table) {
    require_rank(t, 2);
    TensorPoly r(3);
    for (const auto& [k, c] : t.terms()) r += c * otimes1(eval_bb(NCPoly(k[0]), a, table), TensorPoly(NCPoly(k[1])));
    return r;
}

TensorPoly bb_ext_first_R(const TensorPoly& t, const NCPoly& a, const DoubleBracketTable& table) {
    require_rank(t, 2);
    TensorPoly r(3);
    for (const auto& [k, c] : t.terms()) r += c * otimes1(TensorPoly(NCPoly(k[0])), eval_bb(NCPoly(k[1]), a, table));
    return r;
}

TensorPoly double_jacobi_residual(const NCPoly& a, const NCPoly& b, const NCPoly& c, const DoubleBracketTable& table) {
    TensorPoly lhs = bb_ext_L(a, eval_bb(b, c, table), table);
    TensorPoly first = bb_ext_first_L(eval_bb(a, b, table), c, table);
    TensorPoly second = bb_ext_R(b, eval_bb(a, c, table), table);
    return lhs - first - second;
}

TensorPoly skew_residual(const NCPoly& a, const NCPoly& b, const DoubleBracketTable& table, Convention conv) {
    TensorPoly flipped = swap(eval_bb(b, a, table));
    return conv == Convention::Paper ? eval_bb(a, b, table) - flipped : eval_bb(a, b, table) + flipped;
}

namespace {

std::string witness(std::initializer_list<const NCPoly*> args) {
    std::string s = "(";
    bool first = true;
    for (const NCPoly* p : args) {
        if (!first) s += ", ";
        s += to_string(*p);
        first = false;
    }
    return s + ")";
}

}  // namespace

Report check_cyclic_skew(const DoubleBracketTable& table, const CheckOptions& opts) {
    const bool vdb = opts.convention == Convention::VdB;
    const std::string id = vdb ? "double-skew-vdb" : "double-skew";
    const std::string tag = vdb ? "antisymmetric convention" : "double-bracket.a";
    Report rep("double-bracket-skew");
    rep.touch(id, tag);
    auto run = [&](const NCPoly& a, const NCPoly& b) {
        TensorPoly r = skew_residual(a, b, table, opts.convention);
        rep.record(id, tag, r.is_zero(), witness({&a, &b}), to_string(r));
    };
    const auto& gens = table.generators();
    for (const auto& a : gens) {
        for (const auto& b : gens) run(NCPoly(a), NCPoly(b));
    }
    Rng rng(opts.seed);
    for (int s = 0; s < opts.samples && !gens.empty(); ++s) {
        NCPoly a(random_word(rng, gens, 1, opts.max_degree));
        NCPoly b(random_word(rng, gens, 1, opts.max_degree));
        run(a, b);
    }
    return rep;
}

Report check_double_jacobi(const DoubleBracketTable& table, const CheckOptions& opts) {
    const std::string id = "double-jacobi";
    const std::string tag = "Jacobi-Kac";
    Report rep("double-poisson-jacobi");
    rep.touch(id, tag);
    auto run = [&](const NCPoly& a, const NCPoly& b, const NCPoly& c) {
        TensorPoly r = double_jacobi_residual(a, b, c, table);
        rep.record(id, tag, r.is_zero(), witness({&a, &b, &c}), to_string(r));
    };
    const auto& gens = table.generators();
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            for (const auto& c : gens) run(NCPoly(a), NCPoly(b), NCPoly(c));
        }
    }
    if (opts.exhaustive) {
        auto words = all_words(gens, 0, opts.max_degree);
        for (const auto& a : words) {
            for (const auto& b : words) {
                for (const auto& c : words) run(NCPoly(a), NCPoly(b), NCPoly(c));
            }
        }
    }
    Rng rng(opts.seed);
    for (int s = 0; s < opts.samples && !gens.empty(); ++s) {
        NCPoly a = random_poly(rng, gens, 1, opts.max_degree, 2);
        NCPoly b = random_poly(rng, gens, 1, opts.max_degree, 2);
        NCPoly c = random_poly(rng, gens, 1, opts.max_degree, 2);
        run(a, b, c);
    }
    return rep;
}

}  // namespace dcalg
