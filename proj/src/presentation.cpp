#include "dcalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dcalg {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::DoublePoisson: return "double-poisson";
        case Kind::Dpva: return "dpva";
        case Kind::Dcd: return "dcd";
    }
    return "?";
}

std::vector<Symbol> Presentation::generators_of(Sort s) const {
    std::vector<Symbol> out;
    for (const auto& g : generators) {
        if (g.sort() == s) out.push_back(g);
    }
    return out;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

// One non-empty line with its position, comment stripped.
struct SourceLine {
    int number = 0;
    int column = 1;  // column of text[0]
    std::string text;
};

std::string trim(const std::string& s, int* leading = nullptr) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        if (leading) *leading = 0;
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    if (leading) *leading = static_cast<int>(b);
    return s.substr(b, e - b + 1);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool reserved(const std::string& name) { return name == "ox" || name == "d" || name == "lambda"; }

LambdaPoly rank_zero(int rank) { return LambdaPoly(TensorPoly(rank)); }

int rank_of(const LambdaPoly& p) { return p.zero().rank(); }

bool scalar_like(const LambdaPoly& p) {
    if (rank_of(p) != 1) return false;
    for (const auto& [e, t] : p.terms()) {
        for (const auto& [k, c] : t.terms()) {
            if (!k[0].empty()) return false;
        }
    }
    return true;
}

// Recursive-descent evaluation of one expression.
class ExprParser {
public:
    ExprParser(const SourceLine& line, std::size_t start, const std::map<std::string, Symbol>& gens,
               const DerivationTable* der)
        : line_(line), pos_(start), gens_(gens), der_(der) {}

    LambdaPoly parse() {
        skip();
        if (pos_ >= text().size()) fail("empty expression");
        LambdaPoly v = sum();
        skip();
        if (pos_ < text().size()) fail("unexpected '" + std::string(1, text()[pos_]) + "'");
        return v;
    }

private:
    const std::string& text() const { return line_.text; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_.number, line_.column + static_cast<int>(pos_), msg);
    }

    void skip() {
        while (pos_ < text().size() && (text()[pos_] == ' ' || text()[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text().size() && text()[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(const std::string& w) {
        skip();
        if (text().compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < text().size() && is_ident_char(text()[end])) return false;
        pos_ = end;
        return true;
    }

    LambdaPoly add(const LambdaPoly& a, const LambdaPoly& b, std::size_t at) {
        if (a.is_zero() && rank_of(a) != rank_of(b)) return b;
        if (b.is_zero() && rank_of(a) != rank_of(b)) return a;
        if (rank_of(a) != rank_of(b)) {
            pos_ = at;
            fail("cannot add tensors of rank " + std::to_string(rank_of(a)) + " and " + std::to_string(rank_of(b)));
        }
        return a + b;
    }

    LambdaPoly sum() {
        LambdaPoly v = tensor_term();
        while (true) {
            std::size_t at = pos_;
            if (accept('+')) {
                v = add(v, tensor_term(), at);
            } else if (accept('-')) {
                v = add(v, -tensor_term(), at);
            } else {
                return v;
            }
        }
    }

    LambdaPoly tensor_term() {
        LambdaPoly left = product();
        std::size_t at = pos_;
        if (!accept_word("ox")) return left;
        LambdaPoly right = product();
        if (rank_of(left) != 1 || rank_of(right) != 1) {
            pos_ = at;
            fail("at most two tensor factors are supported");
        }
        LambdaPoly out = rank_zero(2);
        for (const auto& [ea, ta] : left.terms()) {
            for (const auto& [eb, tb] : right.terms()) out.add(ea.lambda + eb.lambda, 0, tensor(ta.to_ncpoly(), tb.to_ncpoly()));
        }
        skip();
        if (accept_word("ox")) fail("at most two tensor factors are supported");
        return out;
    }

    LambdaPoly multiply(const LambdaPoly& a, const LambdaPoly& b, std::size_t at) {
        if (rank_of(a) == 1 && rank_of(b) == 1) {
            LambdaPoly out = rank_zero(1);
            for (const auto& [ea, ta] : a.terms()) {
                for (const auto& [eb, tb] : b.terms()) {
                    out.add(ea.lambda + eb.lambda, 0, TensorPoly(ta.to_ncpoly() * tb.to_ncpoly()));
                }
            }
            return out;
        }
        const LambdaPoly* scalar = scalar_like(a) ? &a : scalar_like(b) ? &b : nullptr;
        if (!scalar) {
            pos_ = at;
            fail("only scalars and lambda can multiply a rank-2 tensor");
        }
        const LambdaPoly& other = scalar == &a ? b : a;
        LambdaPoly out = rank_zero(rank_of(other));
        for (const auto& [e, t] : scalar->terms()) {
            Scalar c = t.to_ncpoly().coefficient(Word());
            LambdaPoly part = other.shifted(e.lambda);
            part *= c;
            out += part;
        }
        return out;
    }

    LambdaPoly product() {
        LambdaPoly v = unary();
        while (true) {
            std::size_t at = pos_;
            if (!accept('*')) return v;
            v = multiply(v, unary(), at);
        }
    }

    LambdaPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    LambdaPoly power() {
        LambdaPoly base = atom();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        int k = std::stoi(text().substr(start, pos_ - start));
        if (rank_of(base) != 1) {
            pos_ = at;
            fail("powers need a rank-1 base");
        }
        LambdaPoly out = LambdaPoly::constant(TensorPoly(NCPoly(1)));
        for (int i = 0; i < k; ++i) out = multiply(out, base, at);
        return out;
    }

    LambdaPoly atom() {
        skip();
        if (pos_ >= text().size()) fail("unexpected end of expression");
        char c = text()[pos_];
        if (c == '(') {
            ++pos_;
            LambdaPoly v = sum();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (!is_ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
        std::size_t start = pos_;
        while (pos_ < text().size() && is_ident_char(text()[pos_])) ++pos_;
        std::string name = text().substr(start, pos_ - start);
        if (name == "lambda") return LambdaPoly::monomial(TensorPoly(NCPoly(1)), 1);
        if (name == "ox") {
            pos_ = start;
            fail("'ox' needs a left operand");
        }
        if (name == "d") {
            if (!accept('(')) fail("expected '(' after d");
            LambdaPoly inner = sum();
            if (!accept(')')) fail("expected ')'");
            return derive(inner, start);
        }
        auto it = gens_.find(name);
        if (it == gens_.end()) {
            pos_ = start;
            fail("unknown generator '" + name + "'");
        }
        return LambdaPoly::constant(TensorPoly(NCPoly(it->second)));
    }

    LambdaPoly derive(const LambdaPoly& p, std::size_t at) {
        if (!der_) {
            pos_ = at;
            fail("d(...) is not available for this kind");
        }
        try {
            return p.map([&](const TensorPoly& t) {
                return t.rank() == 1 ? TensorPoly(d(t.to_ncpoly(), *der_)) : d_tensor(t, *der_);
            });
        } catch (const AlgebraError& err) {
            pos_ = at;
            fail(err.what());
        }
    }

    LambdaPoly number() {
        std::size_t start = pos_;
        while (pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_]))) ++pos_;
        std::string lit = text().substr(start, pos_ - start);
        if (pos_ < text().size() && text()[pos_] == '/') {
            std::size_t den = ++pos_;
            while (pos_ < text().size() && std::isdigit(static_cast<unsigned char>(text()[pos_]))) ++pos_;
            if (den == pos_) fail("expected a denominator");
            lit += "/" + text().substr(den, pos_ - den);
        }
        Scalar value;
        try {
            value = Scalar(lit);
        } catch (const std::invalid_argument&) {
            pos_ = start;
            fail("malformed number '" + lit + "'");
        }
        if (value.get_den() == 0) {
            pos_ = start;
            fail("zero denominator");
        }
        value.canonicalize();
        return LambdaPoly::constant(TensorPoly(NCPoly(value)));
    }

    const SourceLine& line_;
    std::size_t pos_;
    const std::map<std::string, Symbol>& gens_;
    const DerivationTable* der_;
};

struct Sections {
    std::map<std::string, std::vector<SourceLine>> lines;
};

const char* const kSections[] = {"options", "generators", "derivation", "pairing", "bracket"};

Sections split_sections(const std::string& text) {
    Sections out;
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        int lead = 0;
        std::string body = trim(raw, &lead);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ParseError(number, lead + 1, "malformed section header");
            std::string name = trim(body.substr(1, body.size() - 2));
            if (std::find(std::begin(kSections), std::end(kSections), name) == std::end(kSections)) {
                throw ParseError(number, lead + 1, "unknown section '" + name + "'");
            }
            current = name;
            out.lines[current];
            continue;
        }
        if (current.empty()) throw ParseError(number, lead + 1, "entry outside any section");
        out.lines[current].push_back(SourceLine{number, lead + 1, body});
    }
    return out;
}

// "lhs = rhs": returns lhs text and the offset of rhs.
std::pair<std::string, std::size_t> split_assignment(const SourceLine& line) {
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) throw ParseError(line.number, line.column, "expected '='");
    return {trim(line.text.substr(0, eq)), eq + 1};
}

int column_of(const SourceLine& line, const std::string& needle) {
    std::size_t at = line.text.find(needle);
    return line.column + static_cast<int>(at == std::string::npos ? 0 : at);
}

bool valid_name(const std::string& s) {
    return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

void parse_options(const std::vector<SourceLine>& lines, Presentation& p) {
    bool have_kind = false;
    std::vector<std::string> seen;
    for (const auto& line : lines) {
        auto [key, at] = split_assignment(line);
        std::string value = trim(line.text.substr(at));
        int col = line.column + static_cast<int>(at);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw ParseError(line.number, line.column, "duplicate option '" + key + "'");
        }
        seen.push_back(key);
        auto integer = [&](long lo) -> long {
            try {
                std::size_t used = 0;
                long v = std::stol(value, &used);
                if (used != value.size() || v < lo) throw std::invalid_argument(value);
                return v;
            } catch (const std::exception&) {
                throw ParseError(line.number, col, "option '" + key + "' needs an integer >= " + std::to_string(lo));
            }
        };
        if (key == "kind") {
            if (value == "double-poisson") p.kind = Kind::DoublePoisson;
            else if (value == "dpva") p.kind = Kind::Dpva;
            else if (value == "dcd") p.kind = Kind::Dcd;
            else throw ParseError(line.number, col, "unknown kind '" + value + "'");
            have_kind = true;
        } else if (key == "graded") {
            if (value != "true" && value != "false") throw ParseError(line.number, col, "graded must be true or false");
            p.options.graded = value == "true";
        } else if (key == "samples") {
            p.options.samples = static_cast<int>(integer(0));
        } else if (key == "seed") {
            p.options.seed = static_cast<std::uint64_t>(integer(0));
        } else if (key == "lambda_cap") {
            p.options.lambda_cap = static_cast<int>(integer(0));
        } else if (key == "N") {
            p.options.n = static_cast<int>(integer(1));
        } else {
            throw ParseError(line.number, line.column, "unknown option '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing option 'kind'");
}

void parse_generators(const std::vector<SourceLine>& lines, Presentation& p, std::map<std::string, Symbol>& names) {
    for (const auto& line : lines) {
        std::size_t colon = line.text.find(':');
        if (colon == std::string::npos) throw ParseError(line.number, line.column, "expected 'name : A' or 'name : E'");
        std::string name = trim(line.text.substr(0, colon));
        std::istringstream rest(line.text.substr(colon + 1));
        std::string sort, weight, extra;
        rest >> sort >> weight >> extra;
        int col = line.column + static_cast<int>(colon) + 1;
        if (!valid_name(name) || reserved(name)) throw ParseError(line.number, line.column, "invalid generator name '" + name + "'");
        if (sort != "A" && sort != "E") throw ParseError(line.number, col, "sort must be A or E");
        if (!weight.empty() && weight != (sort == "A" ? "0" : "1")) {
            throw ParseError(line.number, col, "sort " + sort + " has weight " + (sort == "A" ? "0" : "1"));
        }
        if (!extra.empty()) throw ParseError(line.number, col, "unexpected '" + extra + "'");
        if (names.count(name)) throw ParseError(line.number, line.column, "duplicate generator '" + name + "'");
        if (p.kind == Kind::DoublePoisson && sort == "E") {
            throw ParseError(line.number, col, "double-poisson presentations take A-sort generators only");
        }
        Symbol s(name, sort == "A" ? Sort::A : Sort::E);
        names.emplace(name, s);
        p.generators.push_back(s);
    }
}

const Symbol& lookup(const std::map<std::string, Symbol>& names, const std::string& name, const SourceLine& line) {
    auto it = names.find(name);
    if (it == names.end()) throw ParseError(line.number, column_of(line, name), "unknown generator '" + name + "'");
    return it->second;
}

std::pair<Symbol, Symbol> parse_key(const std::string& lhs, const SourceLine& line,
                                    const std::map<std::string, Symbol>& names) {
    std::size_t comma = lhs.find(',');
    if (comma == std::string::npos) throw ParseError(line.number, line.column, "expected 'a, b = value'");
    std::string a = trim(lhs.substr(0, comma)), b = trim(lhs.substr(comma + 1));
    return {lookup(names, a, line), lookup(names, b, line)};
}

template <class Fn>
void guarded(const SourceLine& line, std::size_t at, Fn fn) {
    try {
        fn();
    } catch (const AlgebraError& err) {
        throw ParseError(line.number, line.column + static_cast<int>(at), err.what());
    }
}

TensorPoly constant_value(const LambdaPoly& v, const SourceLine& line, std::size_t at, int rank) {
    if (v.degree(Var::Lambda) > 0) throw ParseError(line.number, line.column + static_cast<int>(at), "lambda is not allowed here");
    TensorPoly t = v.coefficient(0);
    if (t.is_zero()) return TensorPoly(rank);
    if (t.rank() != rank) {
        throw ParseError(line.number, line.column + static_cast<int>(at), "expected a rank-" + std::to_string(rank) + " value");
    }
    return t;
}

LambdaPoly rank2_value(const LambdaPoly& v, const SourceLine& line, std::size_t at) {
    if (v.is_zero()) return rank_zero(2);
    if (rank_of(v) != 2) throw ParseError(line.number, line.column + static_cast<int>(at), "expected a rank-2 value");
    return v;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Sections sec = split_sections(text);
    Presentation p;
    parse_options(sec.lines["options"], p);
    std::map<std::string, Symbol> names;
    parse_generators(sec.lines["generators"], p, names);

    bool differential = p.kind != Kind::DoublePoisson;
    if (!differential && !sec.lines["derivation"].empty()) {
        throw ParseError(sec.lines["derivation"].front().number, 1, "double-poisson presentations have no derivation");
    }
    if (p.kind != Kind::Dcd && !sec.lines["pairing"].empty()) {
        throw ParseError(sec.lines["pairing"].front().number, 1, "only dcd presentations have a pairing");
    }

    std::vector<std::string> seen;
    for (const auto& line : sec.lines["derivation"]) {
        auto [lhs, at] = split_assignment(line);
        const Symbol& a = lookup(names, lhs, line);
        if (a.sort() != Sort::A) throw ParseError(line.number, line.column, "derivation keys must be A-sort generators");
        if (std::find(seen.begin(), seen.end(), lhs) != seen.end()) {
            throw ParseError(line.number, line.column, "duplicate derivation entry for '" + lhs + "'");
        }
        seen.push_back(lhs);
        LambdaPoly v = ExprParser(line, at, names, nullptr).parse();
        TensorPoly t = constant_value(v, line, at, 1);
        guarded(line, at, [&] { p.derivation.set(a, t.to_ncpoly()); });
    }
    if (differential) {
        for (const auto& a : p.generators_of(Sort::A)) {
            if (!p.derivation.contains(a)) p.derivation.declare(a);
        }
    }

    std::vector<Symbol> a_gens = p.generators_of(Sort::A), e_gens = p.generators_of(Sort::E);
    std::optional<DoubleBracketTable> db;
    LambdaBracketTable lt;
    DCDStructure cd;
    guarded(SourceLine{1, 1, ""}, 0, [&] {
        if (p.kind == Kind::DoublePoisson) db.emplace(p.generators);
        if (p.kind == Kind::Dpva) lt = LambdaBracketTable(p.generators, p.derivation);
        if (p.kind == Kind::Dcd) cd = DCDStructure(a_gens, e_gens, p.derivation);
    });
    const DerivationTable* der = differential ? &p.derivation : nullptr;

    for (const auto& line : sec.lines["pairing"]) {
        auto [lhs, at] = split_assignment(line);
        auto key = parse_key(lhs, line, names);
        if (p.pairing.count(key)) throw ParseError(line.number, line.column, "duplicate pairing entry");
        TensorPoly t = constant_value(ExprParser(line, at, names, der).parse(), line, at, 2);
        guarded(line, at, [&] { cd.set_pairing(key.first, key.second, t); });
        if (!t.is_zero()) p.pairing.emplace(key, t);
    }
    std::map<std::pair<Symbol, Symbol>, bool> bracket_seen;
    for (const auto& line : sec.lines["bracket"]) {
        auto [lhs, at] = split_assignment(line);
        auto key = parse_key(lhs, line, names);
        if (bracket_seen.count(key)) throw ParseError(line.number, line.column, "duplicate bracket entry");
        bracket_seen[key] = true;
        LambdaPoly v = rank2_value(ExprParser(line, at, names, der).parse(), line, at);
        guarded(line, at, [&] {
            switch (p.kind) {
                case Kind::DoublePoisson: db->set(key.first, key.second, constant_value(v, line, at, 2)); break;
                case Kind::Dpva: lt.set(key.first, key.second, v); break;
                case Kind::Dcd: cd.set_bracket(key.first, key.second, constant_value(v, line, at, 2)); break;
            }
        });
        if (!v.is_zero()) p.bracket.emplace(key, v);
    }
    return p;
}

std::string expression_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    if (p.degree(Var::Lambda) == 0) return to_string(p.coefficient(0));
    std::string out;
    for (const auto& [e, t] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(t) + ")";
        if (e.lambda == 1) out += "*lambda";
        if (e.lambda > 1) out += "*lambda^" + std::to_string(e.lambda);
    }
    return out;
}

std::string print_presentation(const Presentation& p) {
    std::string out = "[options]\nkind = " + to_string(p.kind) + "\n";
    if (p.options.graded) out += std::string("graded = ") + (*p.options.graded ? "true" : "false") + "\n";
    if (p.options.samples) out += "samples = " + std::to_string(*p.options.samples) + "\n";
    if (p.options.seed) out += "seed = " + std::to_string(*p.options.seed) + "\n";
    if (p.options.lambda_cap) out += "lambda_cap = " + std::to_string(*p.options.lambda_cap) + "\n";
    if (p.options.n) out += "N = " + std::to_string(*p.options.n) + "\n";
    out += "\n[generators]\n";
    for (const auto& g : p.generators) out += g.name() + (g.sort() == Sort::A ? " : A\n" : " : E\n");
    if (p.kind != Kind::DoublePoisson) {
        out += "\n[derivation]\n";
        for (const auto& [a, image] : p.derivation.entries()) {
            if (!image.is_zero()) out += a.name() + " = " + to_string(image) + "\n";
        }
    }
    if (p.kind == Kind::Dcd) {
        out += "\n[pairing]\n";
        for (const auto& [key, t] : p.pairing) out += key.first.name() + ", " + key.second.name() + " = " + to_string(t) + "\n";
    }
    out += "\n[bracket]\n";
    for (const auto& [key, v] : p.bracket) {
        out += key.first.name() + ", " + key.second.name() + " = " + expression_string(v) + "\n";
    }
    return out;
}

DoubleBracketTable to_double_bracket(const Presentation& p) {
    if (p.kind != Kind::DoublePoisson) throw AlgebraError("not a double-poisson presentation");
    DoubleBracketTable t(p.generators);
    for (const auto& [key, v] : p.bracket) t.set(key.first, key.second, v.coefficient(0));
    return t;
}

LambdaBracketTable to_lambda_table(const Presentation& p) {
    if (p.kind != Kind::Dpva) throw AlgebraError("not a dpva presentation");
    LambdaBracketTable t(p.generators, p.derivation, p.options.graded.value_or(false));
    for (const auto& [key, v] : p.bracket) t.set(key.first, key.second, v);
    return t;
}

DCDStructure to_dcd(const Presentation& p) {
    if (p.kind != Kind::Dcd) throw AlgebraError("not a dcd presentation");
    DCDStructure s(p.generators_of(Sort::A), p.generators_of(Sort::E), p.derivation);
    for (const auto& [key, t] : p.pairing) s.set_pairing(key.first, key.second, t);
    for (const auto& [key, v] : p.bracket) s.set_bracket(key.first, key.second, v.coefficient(0));
    return s;
}

Presentation from_lambda_table(const LambdaBracketTable& t) {
    Presentation p;
    p.kind = Kind::Dpva;
    p.generators = t.generators();
    p.derivation = t.derivation();
    p.bracket = t.entries();
    p.options.graded = t.graded();
    return p;
}

Presentation from_dcd(const DCDStructure& s) {
    Presentation p;
    p.kind = Kind::Dcd;
    p.generators = s.generators();
    p.derivation = s.derivation();
    p.pairing = s.pairing_entries();
    for (const auto& [key, t] : s.bracket_entries()) p.bracket.emplace(key, LambdaPoly::constant(t));
    return p;
}

}  // namespace dcalg
