#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "dcalg/equivalence.hpp"
#include "dcalg/presentation.hpp"
#include "dcalg/rep_kr.hpp"

namespace dcalg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
    std::string file;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<int> n;
    std::optional<std::string> convention;
    bool json = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

CheckOptions check_options(const Presentation& p, const Flags& f) {
    CheckOptions opts;
    if (auto s = f.seed ? f.seed : p.options.seed) opts.seed = *s;
    if (auto s = f.samples ? f.samples : p.options.samples) opts.samples = *s;
    if (p.options.lambda_cap) opts.lambda_cap = *p.options.lambda_cap;
    if (f.convention) opts.convention = *f.convention == "vdb" ? Convention::VdB : Convention::Paper;
    return opts;
}

void emit(const Report& r, const Flags& f, std::ostream& out) { out << (f.json ? r.to_json() : r.to_text()); }

int exit_code(const Report& r) { return r.ok() ? 0 : 1; }

int cmd_check(const Presentation& p, const Flags& f, std::ostream& out) {
    CheckOptions opts = check_options(p, f);
    Report r;
    switch (p.kind) {
        case Kind::DoublePoisson:
            r = check_double_jacobi(to_double_bracket(p), opts);
            r.merge(check_cyclic_skew(to_double_bracket(p), opts));
            break;
        case Kind::Dpva: r = check_dpva(to_lambda_table(p), opts); break;
        case Kind::Dcd: r = check_cd_axioms(to_dcd(p), opts); break;
    }
    emit(r, f, out);
    return exit_code(r);
}

int cmd_convert(const Presentation& p, const Flags& f, std::ostream& out) {
    Presentation q;
    switch (p.kind) {
        case Kind::DoublePoisson: throw UsageError("convert takes a dpva or dcd presentation");
        case Kind::Dpva: q = from_dcd(dpva_to_cd(to_lambda_table(p))); break;
        case Kind::Dcd: q = from_lambda_table(cd_to_dpva(to_dcd(p))); break;
    }
    std::string text = print_presentation(q);
    if (f.json) {
        Json j;
        j["kind"] = to_string(q.kind);
        j["presentation"] = text;
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
    return 0;
}

int cmd_roundtrip(const Presentation& p, const Flags& f, std::ostream& out) {
    CheckOptions opts = check_options(p, f);
    Report r;
    switch (p.kind) {
        case Kind::DoublePoisson: throw UsageError("roundtrip takes a dpva or dcd presentation");
        case Kind::Dpva: r = roundtrip_check_rev(to_lambda_table(p), opts); break;
        case Kind::Dcd: r = roundtrip_check(to_dcd(p), opts); break;
    }
    emit(r, f, out);
    return exit_code(r);
}

int cmd_appendix(const Presentation& p, const Flags& f, std::ostream& out) {
    if (p.kind != Kind::Dcd) throw UsageError("appendix takes a dcd presentation");
    Report r = check_appendix_identities(to_dcd(p), check_options(p, f));
    emit(r, f, out);
    return exit_code(r);
}

struct Entry {
    std::string type;
    std::vector<std::string> args;
    std::string value;
};

std::string lambda_string(const CLambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (e.lambda == 1) out += "*lambda";
        if (e.lambda > 1) out += "*lambda^" + std::to_string(e.lambda);
    }
    return out;
}

std::vector<Entry> induced_entries(const Presentation& p, int n) {
    std::vector<Entry> out;
    switch (p.kind) {
        case Kind::DoublePoisson: {
            auto pb = induced_poisson(to_double_bracket(p), n);
            for (const auto& s : pb.symbols()) {
                for (const auto& t : pb.symbols()) {
                    CPoly v = pb.bracket(CPoly(s), CPoly(t));
                    if (!v.is_zero()) out.push_back({"bracket", {to_string(s), to_string(t)}, to_string(v)});
                }
            }
            break;
        }
        case Kind::Dpva: {
            auto lb = induced_lambda(to_lambda_table(p), n);
            for (const auto& s : lb.symbols()) {
                if (s.sort() == Sort::A) {
                    CPoly ds = lb.d(CPoly(s));
                    if (!ds.is_zero()) out.push_back({"derivation", {to_string(s)}, to_string(ds)});
                }
            }
            for (const auto& s : lb.symbols()) {
                for (const auto& t : lb.symbols()) {
                    CLambdaPoly v = lb.bracket(CPoly(s), CPoly(t));
                    if (!v.is_zero()) out.push_back({"lambda-bracket", {to_string(s), to_string(t)}, lambda_string(v)});
                }
            }
            break;
        }
        case Kind::Dcd: {
            auto cd = induced_cd(to_dcd(p), n);
            for (const auto& a : cd.a_symbols()) {
                CPoly da = cd.d(CPoly(a));
                if (!da.is_zero()) out.push_back({"derivation", {to_string(a)}, to_string(da)});
            }
            for (const auto& e : cd.e_symbols()) {
                for (const auto& f : cd.e_symbols()) {
                    CPoly v = cd.pairing(CPoly(e), CPoly(f));
                    if (!v.is_zero()) out.push_back({"pairing", {to_string(e), to_string(f)}, to_string(v)});
                }
            }
            for (const auto& e : cd.e_symbols()) {
                for (const auto& f : cd.e_symbols()) {
                    CPoly v = cd.bracket(CPoly(e), CPoly(f));
                    if (!v.is_zero()) out.push_back({"bracket", {to_string(e), to_string(f)}, to_string(v)});
                }
            }
            break;
        }
    }
    return out;
}

std::string entry_text(const Entry& e, Kind k) {
    if (e.type == "derivation") return "d(" + e.args[0] + ") = " + e.value;
    if (e.type == "pairing") return "<" + e.args[0] + ", " + e.args[1] + "> = " + e.value;
    if (e.type == "lambda-bracket") return "{" + e.args[0] + " _lambda " + e.args[1] + "} = " + e.value;
    if (k == Kind::DoublePoisson) return "{" + e.args[0] + ", " + e.args[1] + "} = " + e.value;
    return "[" + e.args[0] + ", " + e.args[1] + "] = " + e.value;
}

int cmd_rep(const Presentation& p, const Flags& f, std::ostream& out) {
    int n = f.n ? *f.n : p.options.n.value_or(1);
    if (n < 1 || n > kMaxMatrixSize) throw UsageError("N must lie in 1.." + std::to_string(kMaxMatrixSize));
    CheckOptions opts = check_options(p, f);
    Report r;
    switch (p.kind) {
        case Kind::DoublePoisson: r = check_induced_poisson(to_double_bracket(p), n, opts); break;
        case Kind::Dpva: r = check_induced_lambda(to_lambda_table(p), n, opts); break;
        case Kind::Dcd: r = check_induced_cd(to_dcd(p), n, opts); break;
    }
    std::vector<Entry> entries = induced_entries(p, n);
    std::string name = p.kind == Kind::DoublePoisson ? "poisson" : p.kind == Kind::Dpva ? "lambda" : "courant-dorfman";
    if (f.json) {
        Json j;
        j["structure"]["type"] = name;
        j["structure"]["N"] = n;
        j["structure"]["entries"] = Json::array();
        for (const auto& e : entries) {
            j["structure"]["entries"].push_back({{"type", e.type}, {"args", e.args}, {"value", e.value}});
        }
        j["report"] = Json::parse(r.to_json());
        out << j.dump(2) << "\n";
    } else {
        out << "structure: " << name << " N=" << n << " entries=" << entries.size() << "\n";
        for (const auto& e : entries) out << entry_text(e, p.kind) << "\n";
        out << r.to_text();
    }
    return exit_code(r);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for double Poisson, double lambda-bracket and double Courant-Dorfman structures",
                 "dcalg"};
    app.require_subcommand(1);
    Flags flags;
    const std::pair<const char*, const char*> commands[] = {
        {"check", "run the axiom suite for the presentation's kind"},
        {"convert", "translate between dcd and dpva presentations"},
        {"roundtrip", "round trip through the other side and check axiom transport"},
        {"rep", "induced commutative structure on N x N matrices"},
        {"appendix", "identities that follow from the dcd axioms"},
    };
    std::string chosen;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", flags.file, "presentation file")->required();
        sub->add_option("--seed", flags.seed, "random seed");
        sub->add_option("--samples", flags.samples, "random samples per check")->check(CLI::NonNegativeNumber);
        sub->add_option("--N", flags.n, "matrix size for rep");
        sub->add_option("--convention", flags.convention, "double-bracket skew convention")
            ->check(CLI::IsMember({"paper", "vdb"}));
        sub->add_flag("--json", flags.json, "machine-readable output");
        sub->callback([&chosen, name = std::string(name)] { chosen = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Presentation p;
        std::string text = read_file(flags.file);
        try {
            p = parse_presentation(text);
        } catch (const ParseError& e) {
            err << flags.file << ": " << e.what() << "\n";
            return 2;
        }
        if (chosen == "check") return cmd_check(p, flags, out);
        if (chosen == "convert") return cmd_convert(p, flags, out);
        if (chosen == "roundtrip") return cmd_roundtrip(p, flags, out);
        if (chosen == "rep") return cmd_rep(p, flags, out);
        return cmd_appendix(p, flags, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace dcalg::cli
