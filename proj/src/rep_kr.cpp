#include "dcalg/rep_kr.hpp"

namespace dcalg {

namespace {

void require_size(int n) {
    if (n < 1 || n > kMaxMatrixSize) {
        throw AlgebraError("matrix size must lie in 1.." + std::to_string(kMaxMatrixSize) + ", got " + std::to_string(n));
    }
}

void require_index(int i, int n) {
    if (i < 1 || i > n) throw AlgebraError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

CPoly word_entry(const Word& w, int i, int j, int n) {
    std::vector<CPoly> row(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(i)] = CPoly(Scalar(1));
    for (const auto& s : w.factors()) {
        std::vector<CPoly> next(row.size());
        for (int t = 1; t <= n; ++t) {
            if (row[static_cast<std::size_t>(t)].is_zero()) continue;
            for (int u = 1; u <= n; ++u) next[static_cast<std::size_t>(u)] += row[static_cast<std::size_t>(t)] * CPoly(IndexedSym(s, t, u));
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

Symbol jet_zero(const Symbol& s) { return Symbol(s.name(), s.sort()); }

std::string witness(std::initializer_list<const IndexedSym*> syms) {
    std::string out = "(";
    for (const IndexedSym* s : syms) out += (out.size() > 1 ? ", " : "") + to_string(*s);
    return out + ")";
}

std::string joined(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
}

void precondition(Report& rep, const Report& source) {
    if (source.ok()) return;
    rep.mark_informational();
    rep.note("source axioms failed (" + joined(source.failed_ids()) + "); induced results are informational");
}

}  // namespace

CPoly matrix_entry(const NCPoly& p, int i, int j, int n) {
    require_size(n);
    require_index(i, n);
    require_index(j, n);
    CPoly r;
    for (const auto& [w, c] : p.terms()) r += word_entry(w, i, j, n) * c;
    return r;
}

CPoly rep_entry(const NCPoly& p, int i, int j, int n) {
    if (!p.is_zero() && p.homogeneous_weight() != 0) throw AlgebraError("rep_entry needs a weight-0 element");
    return matrix_entry(p, i, j, n);
}

CPoly rep_module_entry(const NCPoly& m, int i, int j, int n) {
    if (!m.is_zero() && m.homogeneous_weight() != 1) throw AlgebraError("rep_module_entry needs a weight-1 element");
    return matrix_entry(m, i, j, n);
}

CPoly index_convention(const TensorPoly& t, int i, int j, int u, int v, int n) {
    if (t.rank() != 2) throw AlgebraError("index convention needs a rank-2 tensor");
    CPoly r;
    for (const auto& [k, c] : t.terms()) {
        CPoly first = word_entry(k[0], u, j, n);
        if (first.is_zero()) continue;
        r += first * word_entry(k[1], i, v, n) * c;
    }
    return r;
}

std::vector<IndexedSym> indexed_symbols(const std::vector<Symbol>& gens, int n) {
    require_size(n);
    std::vector<IndexedSym> out;
    for (const auto& g : gens) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) out.emplace_back(g, i, j);
        }
    }
    return out;
}

CPoly derivative(const CPoly& p, const DerivationTable& der, int n) {
    CPoly r;
    for_each_factor(p, [&](const IndexedSym& s, const CPoly& rest) {
        if (s.sort() == Sort::A) {
            r += rest * matrix_entry(der.image(s.base()), s.row(), s.col(), n);
        } else {
            Symbol next(s.base().name(), Sort::E, s.base().jet() + 1);
            r += rest * CPoly(IndexedSym(next, s.row(), s.col()));
        }
    });
    return r;
}

std::map<IndexedSym, CPoly> module_coordinates(const CPoly& m) {
    std::map<IndexedSym, CPoly> out;
    for (const auto& [mono, c] : m.terms()) {
        const IndexedSym* e = nullptr;
        CPoly::Monomial rest;
        for (const auto& s : mono) {
            if (s.sort() != Sort::E) {
                rest.push_back(s);
            } else if (e) {
                throw AlgebraError("'" + to_string(m) + "' is not linear in weight-1 entries");
            } else {
                e = &s;
            }
        }
        if (!e) throw AlgebraError("'" + to_string(m) + "' has a term without a weight-1 entry");
        out[*e].add(std::move(rest), c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---- Poisson brackets ----

InducedPoisson::InducedPoisson(DoubleBracketTable table, int n) : table_(std::move(table)), n_(n) { require_size(n); }

CPoly InducedPoisson::on_symbols(const IndexedSym& a, const IndexedSym& b) const {
    return index_convention(table_.get(a.base(), b.base()), a.row(), a.col(), b.row(), b.col(), n_);
}

CPoly InducedPoisson::bracket(const CPoly& p, const CPoly& q) const {
    CPoly r;
    for_each_factor(p, [&](const IndexedSym& s, const CPoly& rp) {
        for_each_factor(q, [&](const IndexedSym& t, const CPoly& rq) { r += rp * rq * on_symbols(s, t); });
    });
    return r;
}

InducedPoisson induced_poisson(const DoubleBracketTable& table, int n) { return InducedPoisson(table, n); }

Report check_induced_poisson(const DoubleBracketTable& table, int n, const CheckOptions& opts) {
    InducedPoisson pb(table, n);
    Report rep("induced-poisson-N" + std::to_string(n));
    const char* tag = "KR-double-Poisson-algebras";
    rep.touch("antisymmetry", tag);
    rep.touch("jacobi", tag);
    auto syms = pb.symbols();
    std::vector<CPoly> polys(syms.begin(), syms.end());
    for (std::size_t a = 0; a < syms.size(); ++a) {
        for (std::size_t b = 0; b < syms.size(); ++b) {
            CPoly r = pb.bracket(polys[a], polys[b]) + pb.bracket(polys[b], polys[a]);
            rep.record("antisymmetry", tag, r.is_zero(), witness({&syms[a], &syms[b]}), to_string(r));
            for (std::size_t c = 0; c < syms.size(); ++c) {
                const CPoly &x = polys[a], &y = polys[b], &z = polys[c];
                CPoly j = pb.bracket(x, pb.bracket(y, z)) + pb.bracket(y, pb.bracket(z, x)) + pb.bracket(z, pb.bracket(x, y));
                rep.record("jacobi", tag, j.is_zero(), witness({&syms[a], &syms[b], &syms[c]}), to_string(j));
            }
        }
    }
    CheckOptions vdb = opts;
    vdb.convention = Convention::VdB;
    Report source = check_double_jacobi(table, vdb);
    source.merge(check_cyclic_skew(table, vdb));
    precondition(rep, source);
    return rep;
}

// ---- lambda-brackets ----

namespace {

CLambdaPoly zero_clambda() { return CLambdaPoly(CPoly()); }

}  // namespace

InducedLambda::InducedLambda(LambdaBracketTable table, int n) : table_(std::move(table)), n_(n) { require_size(n); }

CLambdaPoly InducedLambda::shift_power(const CLambdaPoly& p, int k) const {
    CLambdaPoly r = zero_clambda();
    CLambdaPoly dp = p;
    for (int j = 0; j <= k; ++j) {
        if (dp.is_zero()) break;
        for (const auto& [e, c] : dp.terms()) r.add(e.lambda + k - j, e.mu, c * binomial(k, j));
        dp = dp.map([this](const CPoly& c) { return d(c); });
    }
    return r;
}

CLambdaPoly InducedLambda::on_symbols(const IndexedSym& a, const IndexedSym& b) const {
    auto hit = cache_.find({a, b});
    if (hit != cache_.end()) return hit->second;
    LambdaPoly entry = table_.get(jet_zero(a.base()), jet_zero(b.base()));
    CLambdaPoly r = zero_clambda();
    for (const auto& [e, t] : entry.terms()) r.add(e.lambda, 0, index_convention(t, a.row(), a.col(), b.row(), b.col(), n_));
    int k = a.base().jet();
    if (k > 0) r = (k % 2 ? Scalar(-1) : Scalar(1)) * r.shifted(k);
    r = shift_power(r, b.base().jet());
    cache_.emplace(std::pair(a, b), r);
    return r;
}

CLambdaPoly InducedLambda::bracket(const CPoly& p, const CPoly& q) const {
    CLambdaPoly r = zero_clambda();
    for_each_factor(p, [&](const IndexedSym& s, const CPoly& rp) {
        // d^k of the left cofactor, shared by every right factor
        std::vector<CPoly> drp{rp};
        for_each_factor(q, [&](const IndexedSym& t, const CPoly& rq) {
            CLambdaPoly st = on_symbols(s, t);
            for (const auto& [e, c] : st.terms()) {
                CPoly coeff = c * rq;
                // {s_{l+d} t}-> rp: (l + d)^p with d on rp
                for (int j = 0; j <= e.lambda; ++j) {
                    while (static_cast<int>(drp.size()) <= j) drp.push_back(d(drp.back()));
                    if (drp[static_cast<std::size_t>(j)].is_zero()) break;
                    r.add(e.lambda - j, 0, coeff * drp[static_cast<std::size_t>(j)] * binomial(e.lambda, j));
                }
            }
        });
    });
    return r;
}

CLambdaPoly InducedLambda::sesquilinearity_left_residual(const CPoly& a, const CPoly& b) const {
    return bracket(d(a), b) + bracket(a, b).shifted(1);
}

CLambdaPoly InducedLambda::sesquilinearity_right_residual(const CPoly& a, const CPoly& b) const {
    return bracket(a, d(b)) - shift_power(bracket(a, b), 1);
}

CLambdaPoly InducedLambda::skew_residual(const CPoly& a, const CPoly& b) const {
    CLambdaPoly r = bracket(a, b);
    CLambdaPoly ba = bracket(b, a);
    // (-l - d)^p c = (-1)^p sum_j binom(p, j) l^{p-j} d^j c
    for (const auto& [e, c] : ba.terms()) {
        CPoly dc = c;
        for (int j = 0; j <= e.lambda && !dc.is_zero(); ++j) {
            r.add(e.lambda - j, 0, dc * (binomial(e.lambda, j) * (e.lambda % 2 ? -1 : 1)));
            dc = d(dc);
        }
    }
    return r;
}

CLambdaPoly InducedLambda::jacobi_residual(const CPoly& a, const CPoly& b, const CPoly& c) const {
    CLambdaPoly r = zero_clambda();
    CLambdaPoly bc = bracket(b, c);
    for (const auto& [e, v] : bc.terms()) {
        CLambdaPoly inner = bracket(a, v);
        for (const auto& [f, w] : inner.terms()) r.add(f.lambda, e.lambda, w);
    }
    CLambdaPoly ac = bracket(a, c);
    for (const auto& [e, v] : ac.terms()) {
        CLambdaPoly inner = bracket(b, v);
        for (const auto& [f, w] : inner.terms()) r.add(e.lambda, f.lambda, w * Scalar(-1));
    }
    CLambdaPoly ab = bracket(a, b);
    for (const auto& [e, v] : ab.terms()) {
        CLambdaPoly outer = substitute_lambda_plus_mu(bracket(v, c)).shifted(e.lambda);
        r -= outer;
    }
    return r;
}

InducedLambda induced_lambda(const LambdaBracketTable& table, int n) { return InducedLambda(table, n); }

Report check_induced_lambda(const LambdaBracketTable& table, int n, const CheckOptions& opts) {
    InducedLambda lb(table, n);
    Report rep("induced-lambda-N" + std::to_string(n));
    const char* tag = "lambda-bracket-comm";
    for (const char* id : {"sesquilinearity-left", "sesquilinearity-right", "skew", "jacobi"}) rep.touch(id, tag);
    auto syms = lb.symbols();
    std::vector<CPoly> polys(syms.begin(), syms.end());
    auto record = [&](const char* id, const CLambdaPoly& r, const std::string& w) {
        std::string text;
        for (const auto& [e, c] : r.terms()) text += (text.empty() ? "" : " + ") + ("(" + to_string(c) + ")" + exponent_suffix(e));
        rep.record(id, tag, r.is_zero(), w, text);
    };
    for (std::size_t a = 0; a < syms.size(); ++a) {
        for (std::size_t b = 0; b < syms.size(); ++b) {
            std::string w = witness({&syms[a], &syms[b]});
            record("sesquilinearity-left", lb.sesquilinearity_left_residual(polys[a], polys[b]), w);
            record("sesquilinearity-right", lb.sesquilinearity_right_residual(polys[a], polys[b]), w);
            record("skew", lb.skew_residual(polys[a], polys[b]), w);
            for (std::size_t c = 0; c < syms.size(); ++c) {
                record("jacobi", lb.jacobi_residual(polys[a], polys[b], polys[c]), witness({&syms[a], &syms[b], &syms[c]}));
            }
        }
    }
    precondition(rep, check_dpva(table, opts));
    return rep;
}

// ---- Courant-Dorfman ----

InducedCD::InducedCD(DCDStructure s, int n) : s_(std::move(s)), n_(n) { require_size(n); }

CPoly InducedCD::pairing_symbols(const IndexedSym& e, const IndexedSym& f) const {
    return index_convention(s_.pairing(e.base(), f.base()), e.row(), e.col(), f.row(), f.col(), n_);
}

CPoly InducedCD::bracket_symbols(const IndexedSym& e, const IndexedSym& f) const {
    return index_convention(s_.bracket(e.base(), f.base()), e.row(), e.col(), f.row(), f.col(), n_);
}

CPoly InducedCD::pairing(const CPoly& m1, const CPoly& m2) const {
    CPoly r;
    auto c1 = module_coordinates(m1);
    auto c2 = module_coordinates(m2);
    for (const auto& [e, a] : c1) {
        for (const auto& [f, b] : c2) r += a * b * pairing_symbols(e, f);
    }
    return r;
}

// [e, c f] = c [e, f] + <e, dc> f
CPoly InducedCD::bracket_right(const IndexedSym& e, const CPoly& m) const {
    CPoly r;
    CPoly pe(e);
    for (const auto& [f, c] : module_coordinates(m)) {
        r += c * bracket_symbols(e, f);
        CPoly dc = d(c);
        if (!dc.is_zero()) r += pairing(pe, dc) * CPoly(f);
    }
    return r;
}

// [c e, m] = c [e, m] + <e, m> dc - <m, dc> e
CPoly InducedCD::bracket(const CPoly& m1, const CPoly& m2) const {
    CPoly r;
    for (const auto& [e, c] : module_coordinates(m1)) {
        CPoly pe(e);
        r += c * bracket_right(e, m2);
        CPoly dc = d(c);
        if (dc.is_zero()) continue;
        r += pairing(pe, m2) * dc;
        r -= pairing(m2, dc) * pe;
    }
    return r;
}

InducedCD induced_cd(const DCDStructure& s, int n) { return InducedCD(s, n); }

Report check_induced_cd(const DCDStructure& s, int n, const CheckOptions& opts) {
    InducedCD cd(s, n);
    Report rep("induced-cd-N" + std::to_string(n));
    const char* ids[] = {"CD-comm.a", "CD-comm.b", "CD-comm.c", "CD-comm.d", "CD-comm.e", "CD-comm.f"};
    for (const char* id : ids) rep.touch(id, id);
    auto record = [&](const char* id, const CPoly& r, const std::string& w) { rep.record(id, id, r.is_zero(), w, to_string(r)); };

    auto es = cd.e_symbols();
    auto as = cd.a_symbols();
    for (const auto& e1 : es) {
        CPoly n1(e1);
        for (const auto& e2 : es) {
            CPoly n2(e2);
            std::string w2 = witness({&e1, &e2});
            record("CD-comm.c", cd.d(cd.pairing(n1, n2)) - cd.bracket(n1, n2) - cd.bracket(n2, n1), w2);
            for (const auto& a : as) {
                CPoly c(a);
                record("CD-comm.a", cd.bracket(n1, c * n2) - c * cd.bracket(n1, n2) - cd.pairing(n1, cd.d(c)) * n2,
                       witness({&e1, &a, &e2}));
            }
            for (const auto& e3 : es) {
                CPoly n3(e3);
                std::string w3 = witness({&e1, &e2, &e3});
                record("CD-comm.b", cd.pairing(n1, cd.d(cd.pairing(n2, n3))) - cd.pairing(cd.bracket(n1, n2), n3) -
                                        cd.pairing(n2, cd.bracket(n1, n3)),
                       w3);
                record("CD-comm.d", cd.bracket(n1, cd.bracket(n2, n3)) - cd.bracket(cd.bracket(n1, n2), n3) -
                                        cd.bracket(n2, cd.bracket(n1, n3)),
                       w3);
            }
        }
    }
    for (const auto& a : as) {
        CPoly da = cd.d(CPoly(a));
        for (const auto& e : es) {
            CPoly r = da.is_zero() ? CPoly() : cd.bracket(da, CPoly(e));
            record("CD-comm.e", r, witness({&a, &e}));
        }
        for (const auto& b : as) {
            CPoly db = cd.d(CPoly(b));
            CPoly r = (da.is_zero() || db.is_zero()) ? CPoly() : cd.pairing(da, db);
            record("CD-comm.f", r, witness({&a, &b}));
        }
    }
    precondition(rep, check_cd_axioms(s, opts));
    return rep;
}

}  // namespace dcalg
