// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dcalg/equivalence.hpp"
#include "dcalg/presentation.hpp"
#include "dcalg/rep_kr.hpp"

using namespace dcalg;

namespace {

Presentation load(const std::string& name) {
    std::ifstream in(std::string(DCALG_SOURCE_DIR) + "/fixtures/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) ok = false;
        details.push_back(std::string(cond ? "ok: " : "failed: ") + what);
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out.empty() ? "none" : out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << s << "s";
    return ss.str();
}

bool clean(const Report& r) { return r.ok() && r.count(Status::Info) == 0; }

Outcome double_poisson_suite() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    DoubleBracketTable loop = to_double_bracket(load("loop.pres"));
    CheckOptions opts;
    opts.exhaustive = true;
    opts.max_degree = 3;
    opts.samples = 200;
    Report r = check_double_jacobi(loop, opts);
    const CheckResult* c = r.find("double-jacobi");
    o.require(c && c->status == Status::Pass, "double Jacobi residual is zero");
    o.require(c && c->instances >= 200, "instances: " + std::to_string(c ? c->instances : 0));
    double t = seconds_since(start);
    o.require(t < 5.0, "runtime " + fmt_seconds(t));
    return o;
}

Outcome dpva_suite() {
    Outcome o;
    LambdaBracketTable t = cd_to_dpva(to_dcd(load("hyp.pres")));
    CheckOptions opts;
    opts.samples = 64;
    Report r = check_dpva(t, opts);
    for (const char* id : {"sesquilinearity-left", "sesquilinearity-right", "skew", "jacobi",
                           "jacobi-expanded-agreement"}) {
        const CheckResult* c = r.find(id);
        o.require(c && c->status == Status::Pass && c->instances >= 64, std::string(id));
    }
    o.require(clean(r), "failing checks: " + join(r.failed_ids()));
    return o;
}

Outcome dcd_suite() {
    Outcome o;
    for (const char* name : {"zero.pres", "hyp.pres"}) {
        Report r = check_cd_axioms(to_dcd(load(name)));
        o.require(clean(r), std::string(name) + " passes every axiom");
    }
    DCDStructure bad = to_dcd(load("bad.pres"));
    Report r = check_cd_axioms(bad);
    const CheckResult* c = r.find("CD.c");
    o.require(c && c->status == Status::Fail, "bad fails CD.c");
    o.require(c && !c->violations.empty() && c->violations.front().witness == "(x, x)", "first CD.c witness is (x, x)");
    o.require(r.failed_ids() == std::vector<std::string>{"CD.c"}, "bad fails exactly CD.c; failing: " + join(r.failed_ids()));
    o.require(check_cd_axioms(bad).to_text() == r.to_text() && check_cd_axioms(bad).to_json() == r.to_json(),
              "report bytes are deterministic");
    return o;
}

const std::vector<DCDStructure>& corpus() {
    static const std::vector<DCDStructure> structures = search_corpus();
    return structures;
}

Outcome appendix_implication() {
    Outcome o;
    const auto& all = corpus();
    o.require(all.size() >= 50, "corpus size " + std::to_string(all.size()));
    int axioms_failed = 0, identities_failed = 0, informational = 0;
    for (const auto& s : all) {
        if (!check_cd_axioms(s).ok()) ++axioms_failed;
        Report r = check_appendix_identities(s);
        if (r.count(Status::Fail) > 0) ++identities_failed;
        if (r.count(Status::Info) > 0) ++informational;
    }
    o.require(axioms_failed == 0, "every corpus structure passes the axioms");
    o.require(identities_failed == 0, "identity failures: " + std::to_string(identities_failed));
    o.require(informational == 0, "informational reports: " + std::to_string(informational));
    return o;
}

Outcome round_trip() {
    Outcome o;
    int forward = 0, backward = 0, transport = 0;
    // four axiom suites per corpus structure
    CheckOptions opts;
    opts.samples = 16;
    for (const auto& s : corpus()) {
        LambdaBracketTable t = cd_to_dpva(s);
        if (!(dpva_to_cd(t) == s)) ++forward;
        if (!same_table(cd_to_dpva(dpva_to_cd(t)), t)) ++backward;
        if (!clean(roundtrip_check(s, opts)) || !clean(roundtrip_check_rev(t, opts))) ++transport;
    }
    o.require(forward == 0, "dcd -> dpva -> dcd mismatches: " + std::to_string(forward));
    o.require(backward == 0, "dpva -> dcd -> dpva mismatches: " + std::to_string(backward));
    o.require(transport == 0, "transport failures: " + std::to_string(transport));
    return o;
}

Outcome kr_transport() {
    Outcome o;
    DoubleBracketTable loop = to_double_bracket(load("loop.pres"));
    DCDStructure hyp = to_dcd(load("hyp.pres"));
    LambdaBracketTable hyp_table = cd_to_dpva(hyp);
    CheckOptions antisym;
    antisym.convention = Convention::VdB;
    for (int n : {1, 2}) {
        auto start = std::chrono::steady_clock::now();
        std::string at = " at N=" + std::to_string(n);
        o.require(clean(check_induced_poisson(loop, n, antisym)), "induced Poisson bracket" + at);
        o.require(clean(check_induced_cd(hyp, n)), "induced Courant-Dorfman axioms" + at);
        o.require(clean(check_induced_lambda(hyp_table, n)), "induced lambda-bracket axioms" + at);
        double t = seconds_since(start);
        if (n == 2) o.require(t < 30.0, "N=2 sweep " + fmt_seconds(t));
    }
    return o;
}

Outcome self_consistency() {
    Outcome o;
    std::vector<LambdaBracketTable> tables{cd_to_dpva(to_dcd(load("hyp.pres"))), to_lambda_table(load("boson.pres")),
                                           to_lambda_table(load("two_boson.pres"))};
    Rng rng(500);
    int mismatches = 0, errors = 0;
    for (int i = 0; i < 500; ++i) {
        const auto& t = tables[i % tables.size()];
        auto alphabet = sampling_alphabet(t.generators());
        NCPoly p = random_poly(rng, alphabet, 1, 3, 3);
        NCPoly q = random_poly(rng, alphabet, 1, 3, 3);
        try {
            if (!(eval_lb(p, q, t, Strategy::LeftFirst) - eval_lb(p, q, t, Strategy::RightFirst)).is_zero()) ++mismatches;
        } catch (const AlgebraError&) {
            ++errors;
        }
    }
    o.require(mismatches == 0 && errors == 0, "reduction order on 500 inputs, mismatches: " +
                                                  std::to_string(mismatches) + ", errors: " + std::to_string(errors));

    std::vector<Symbol> letters{Symbol("x", Sort::A), Symbol("y", Sort::A), Symbol("e", Sort::E)};
    int unstable = 0;
    for (int i = 0; i < 500; ++i) {
        int rank = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<TensorKey, Scalar>> raw;
        int terms = rng.between(0, 8);
        for (int k = 0; k < terms; ++k) {
            TensorKey key;
            for (int s = 0; s < rank; ++s) key.push_back(random_word(rng, letters, 0, 2));
            Scalar c = rng.small_coefficient();
            raw.emplace_back(key, c);
            if (rng.coin()) raw.emplace_back(key, -c);
        }
        TensorPoly once = normalize(rank, raw);
        std::vector<std::pair<TensorKey, Scalar>> again(once.terms().begin(), once.terms().end());
        if (!(normalize(rank, again) == once)) ++unstable;
    }
    o.require(unstable == 0, "normalize idempotent on 500 inputs");

    auto perms = Permutation::all(3);
    bool laws = perms.size() == 6;
    Permutation id = Permutation::identity(3);
    for (int trial = 0; trial < 20; ++trial) {
        TensorPoly t(3);
        for (int k = 0; k < 4; ++k) {
            t = t + rng.small_coefficient() * tensor(NCPoly(random_word(rng, letters, 0, 2)),
                                                     NCPoly(random_word(rng, letters, 0, 2)),
                                                     NCPoly(random_word(rng, letters, 0, 2)));
        }
        laws = laws && apply_sigma(id, t) == t;
        for (const auto& s : perms) {
            laws = laws && s * id == s && id * s == s && s * s.inverse() == id;
            laws = laws && apply_sigma(s.inverse(), apply_sigma(s, t)) == t;
            for (const auto& r : perms) {
                laws = laws && apply_sigma(s * r, t) == apply_sigma(s, apply_sigma(r, t));
                for (const auto& q : perms) laws = laws && (s * r) * q == s * (r * q);
            }
        }
    }
    o.require(laws, "S3 group laws and action");
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"double Poisson suite", double_poisson_suite},
        {"double lambda-bracket suite", dpva_suite},
        {"Courant-Dorfman axiom suite", dcd_suite},
        {"appendix identities on the corpus", appendix_implication},
        {"round trip and axiom transport", round_trip},
        {"induced structures on matrices", kr_transport},
        {"engine self-consistency", self_consistency},
    };
    bool all = true;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.details.push_back(std::string("exception: ") + e.what());
        }
        all = all && o.ok;
        std::cout << "criterion " << index++ << " " << (o.ok ? "PASS" : "FAIL") << " " << name << " ("
                  << fmt_seconds(seconds_since(start)) << ")\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
    }
    return all ? 0 : 1;
}
