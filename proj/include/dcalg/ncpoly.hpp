// Free noncommutative polynomials over Q and their tensor powers (ranks 1-3).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcalg {

using Scalar = mpq_class;

std::string scalar_to_string(const Scalar& s);
// Appends "c*body" to a sum rendering, sign pulled out.
void append_term(std::string& out, const Scalar& c, const std::string& body, bool body_is_unit);
// Accepts "3", "-3", "3/4"; throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Sort : std::uint8_t { A, E };

// A generator or one of its formal derivatives. Names are interned, so
// equality is a pointer comparison; ordering falls back to the name text.
class Symbol {
public:
    Symbol() = default;
    Symbol(std::string_view name, Sort sort, int jet = 0);

    const std::string& name() const { return *name_; }
    Sort sort() const { return sort_; }
    int jet() const { return jet_; }
    int weight() const { return sort_ == Sort::E ? 1 + jet_ : 0; }
    Symbol with_jet(int jet) const;
    Symbol base() const { return with_jet(0); }

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.name_ == b.name_ && a.sort_ == b.sort_ && a.jet_ == b.jet_;
    }
    friend bool operator<(const Symbol& a, const Symbol& b);

private:
    const std::string* name_ = nullptr;
    Sort sort_ = Sort::A;
    int jet_ = 0;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> factors);
    explicit Word(const Symbol& s) : Word(std::vector<Symbol>{s}) {}

    const std::vector<Symbol>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    int weight() const { return weight_; }
    const Symbol& operator[](std::size_t i) const { return factors_[i]; }

    Word subword(std::size_t from, std::size_t to) const;
    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }
    // Canonical order: weight, length, then factors (name, sort, jet).
    friend bool operator<(const Word& a, const Word& b);

private:
    std::vector<Symbol> factors_;
    int weight_ = 0;
};

class NCPoly {
public:
    using Terms = std::map<Word, Scalar>;

    NCPoly() = default;
    NCPoly(const Scalar& c);  // NOLINT: constants convert implicitly
    NCPoly(int c) : NCPoly(Scalar(c)) {}
    explicit NCPoly(const Word& w, const Scalar& c = 1);
    explicit NCPoly(const Symbol& s) : NCPoly(Word(s)) {}

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const Word& w, const Scalar& c);
    Scalar coefficient(const Word& w) const;

    // Weight of every term if homogeneous, -1 if mixed, 0 for the zero polynomial.
    int homogeneous_weight() const;
    bool is_homogeneous() const;
    int max_weight() const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) { return a *= Scalar(-1); }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

NCPoly nc_mul(const NCPoly& p, const NCPoly& q);

using TensorKey = std::vector<Word>;

struct TensorKeyLess {
    bool operator()(const TensorKey& a, const TensorKey& b) const;
};

class TensorPoly {
public:
    using Terms = std::map<TensorKey, Scalar, TensorKeyLess>;

    TensorPoly() : TensorPoly(1) {}
    explicit TensorPoly(int rank);
    // Rank-1 embedding.
    explicit TensorPoly(const NCPoly& p);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const TensorKey& key, const Scalar& c);
    void add_term(TensorKey&& key, const Scalar& c);
    Scalar coefficient(const TensorKey& key) const;

    // Rank-1 view; throws unless rank 1.
    NCPoly to_ncpoly() const;

    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const Scalar& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator-(TensorPoly a) { return a *= Scalar(-1); }
    friend TensorPoly operator*(const Scalar& c, TensorPoly a) { return a *= c; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    // Terms whose slot weights equal `weights` exactly.
    TensorPoly project(const std::vector<int>& weights) const;
    // Sum of slot weights if homogeneous, -1 otherwise, 0 for zero.
    int homogeneous_weight() const;
    bool slot_weights_are(const std::vector<int>& weights) const;

private:
    int rank_;
    Terms terms_;
};

// Tensor product of tensors; ranks add and must stay <= 3.
TensorPoly tensor(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor(const NCPoly& a, const NCPoly& b);
TensorPoly tensor(const NCPoly& a, const NCPoly& b, const NCPoly& c);

enum class Side { Left, Right };

// Module actions: Left puts `a` in front of slot i+1; Right appends it to slot rank-i.
TensorPoly star(const NCPoly& a, const TensorPoly& t, int i, Side side);

// Multiply slot `slot` (0-based) by `a` on the given side.
TensorPoly multiply_slot(const TensorPoly& t, int slot, const NCPoly& a, Side side);

// Jump insertion: a (x) (b (x) c) = b (x) a (x) c and (a (x) b) (x) c = a (x) c (x) b.
TensorPoly otimes1(const TensorPoly& x, const TensorPoly& y);

// Permutation of {1..n} as images; s[i-1] = s(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation cycle(std::vector<int> cycle, int n);
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(i - 1); }
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& s, const Permutation& t);  // s after t
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

// Moves slot i to slot s(i).
TensorPoly apply_sigma(const Permutation& s, const TensorPoly& t);
// The transposition on rank 2.
TensorPoly swap(const TensorPoly& t);
// (v1 (x) v2 (x) v3) -> v3 (x) v1 (x) v2
TensorPoly sigma123(const TensorPoly& t);
TensorPoly sigma132(const TensorPoly& t);

// Collects raw (possibly repeated or zero) terms into canonical form.
NCPoly normalize(const std::vector<std::pair<Word, Scalar>>& raw);
TensorPoly normalize(int rank, const std::vector<std::pair<TensorKey, Scalar>>& raw);

// Plain text rendering in the presentation grammar.
std::string to_string(const Symbol& s);
std::string to_string(const Word& w);
std::string to_string(const NCPoly& p);
std::string to_string(const TensorPoly& t);

}  // namespace dcalg
