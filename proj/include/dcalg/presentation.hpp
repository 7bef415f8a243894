// Plain-text presentations of double Poisson, double lambda-bracket and
// double Courant-Dorfman structures.
//
//   [options]      kind = double-poisson | dpva | dcd, graded, samples, seed, lambda_cap, N
//   [generators]   name : A | E
//   [derivation]   x = expr
//   [pairing]      e, f = expr
//   [bracket]      a, b = expr
//
// Expressions: generator names, rationals, + - *, ^ with a nonnegative
// integer, d(expr), `ox` for the tensor product, `lambda`, parentheses.
// `#` starts a comment.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dcalg/dcd.hpp"
#include "dcalg/double_bracket.hpp"
#include "dcalg/dpva.hpp"

namespace dcalg {

enum class Kind { DoublePoisson, Dpva, Dcd };

std::string to_string(Kind k);

struct PresentationOptions {
    std::optional<bool> graded;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<int> lambda_cap;
    std::optional<int> n;
    friend bool operator==(const PresentationOptions&, const PresentationOptions&) = default;
};

struct Presentation {
    Kind kind = Kind::Dcd;
    std::vector<Symbol> generators;
    DerivationTable derivation;  // every A-generator declared for dpva and dcd
    std::map<std::pair<Symbol, Symbol>, TensorPoly> pairing;
    std::map<std::pair<Symbol, Symbol>, LambdaPoly> bracket;
    PresentationOptions options;

    std::vector<Symbol> generators_of(Sort s) const;
    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.kind == b.kind && a.generators == b.generators && a.derivation == b.derivation &&
               a.pairing == b.pairing && a.bracket == b.bracket && a.options == b.options;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Presentation parse_presentation(const std::string& text);
// Normalized text; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);

DoubleBracketTable to_double_bracket(const Presentation& p);
LambdaBracketTable to_lambda_table(const Presentation& p);
DCDStructure to_dcd(const Presentation& p);
Presentation from_lambda_table(const LambdaBracketTable& t);
Presentation from_dcd(const DCDStructure& s);

// Rendering of a lambda-polynomial in the expression grammar.
std::string expression_string(const LambdaPoly& p);

}  // namespace dcalg
