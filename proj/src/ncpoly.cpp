#include "dcalg/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace dcalg {

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
    std::string str(text);
    if (str.empty()) throw std::invalid_argument("empty rational literal");
    Scalar q;
    if (q.set_str(str, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational literal '" + str + "'");
    }
    q.canonicalize();
    return q;
}

namespace {

const std::string* intern(std::string_view name) {
    static std::mutex mu;
    static std::unordered_set<std::string> pool;
    std::lock_guard<std::mutex> lock(mu);
    return &*pool.emplace(name).first;
}

}  // namespace

Symbol::Symbol(std::string_view name, Sort sort, int jet) : name_(intern(name)), sort_(sort), jet_(jet) {
    if (jet < 0) throw AlgebraError("negative jet order");
    if (jet > 0 && sort == Sort::A) throw AlgebraError("A-sort symbol '" + std::string(name) + "' cannot carry a jet");
}

Symbol Symbol::with_jet(int jet) const {
    Symbol s = *this;
    if (jet > 0 && sort_ == Sort::A) throw AlgebraError("A-sort symbol '" + *name_ + "' cannot carry a jet");
    s.jet_ = jet;
    return s;
}

bool operator<(const Symbol& a, const Symbol& b) {
    if (a.name_ != b.name_) {
        int c = a.name_->compare(*b.name_);
        if (c != 0) return c < 0;
    }
    if (a.sort_ != b.sort_) return a.sort_ < b.sort_;
    return a.jet_ < b.jet_;
}

Word::Word(std::vector<Symbol> factors) : factors_(std::move(factors)) {
    for (const auto& s : factors_) weight_ += s.weight();
}

Word Word::subword(std::size_t from, std::size_t to) const {
    return Word(std::vector<Symbol>(factors_.begin() + static_cast<long>(from), factors_.begin() + static_cast<long>(to)));
}

Word operator*(const Word& a, const Word& b) {
    Word w;
    w.factors_.reserve(a.size() + b.size());
    w.factors_.insert(w.factors_.end(), a.factors_.begin(), a.factors_.end());
    w.factors_.insert(w.factors_.end(), b.factors_.begin(), b.factors_.end());
    w.weight_ = a.weight_ + b.weight_;
    return w;
}

bool operator<(const Word& a, const Word& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end());
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(const Scalar& c) {
    if (c != 0) terms_.emplace(Word(), c);
}

NCPoly::NCPoly(const Word& w, const Scalar& c) {
    if (c != 0) terms_.emplace(w, c);
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int NCPoly::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    int w = terms_.begin()->first.weight();
    for (const auto& [word, c] : terms_) {
        if (word.weight() != w) return -1;
    }
    return w;
}

bool NCPoly::is_homogeneous() const { return homogeneous_weight() >= 0; }

int NCPoly::max_weight() const {
    int w = 0;
    for (const auto& [word, c] : terms_) w = std::max(w, word.weight());
    return w;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    }
    return r;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) { return p * q; }

// ------------------------------------------------------------ TensorPoly

bool TensorKeyLess::operator()(const TensorKey& a, const TensorKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

TensorPoly::TensorPoly(int rank) : rank_(rank) {
    if (rank < 1 || rank > 3) throw AlgebraError("tensor rank must be 1, 2 or 3");
}

TensorPoly::TensorPoly(const NCPoly& p) : rank_(1) {
    for (const auto& [w, c] : p.terms()) terms_.emplace(TensorKey{w}, c);
}

void TensorPoly::add_term(const TensorKey& key, const Scalar& c) { add_term(TensorKey(key), c); }

void TensorPoly::add_term(TensorKey&& key, const Scalar& c) {
    if (c == 0) return;
    if (static_cast<int>(key.size()) != rank_) throw AlgebraError("tensor key does not match rank");
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar TensorPoly::coefficient(const TensorKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

NCPoly TensorPoly::to_ncpoly() const {
    if (rank_ != 1) throw AlgebraError("expected a rank-1 tensor");
    NCPoly p;
    for (const auto& [k, c] : terms_) p.add_term(k[0], c);
    return p;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (o.rank_ != rank_) throw AlgebraError("rank mismatch in tensor sum");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    if (o.rank_ != rank_) throw AlgebraError("rank mismatch in tensor difference");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorPoly TensorPoly::project(const std::vector<int>& weights) const {
    if (static_cast<int>(weights.size()) != rank_) throw AlgebraError("projection pattern does not match rank");
    TensorPoly r(rank_);
    for (const auto& [k, c] : terms_) {
        bool match = true;
        for (int i = 0; i < rank_ && match; ++i) match = k[i].weight() == weights[i];
        if (match) r.terms_.emplace(k, c);
    }
    return r;
}

int TensorPoly::homogeneous_weight() const {
    int w = -2;
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (const auto& word : k) s += word.weight();
        if (w == -2) w = s;
        else if (w != s) return -1;
    }
    return w == -2 ? 0 : w;
}

bool TensorPoly::slot_weights_are(const std::vector<int>& weights) const {
    return project(weights).size() == size();
}

TensorPoly tensor(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r(a.rank() + b.rank());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            TensorKey k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(std::move(k), ca * cb);
        }
    }
    return r;
}

TensorPoly tensor(const NCPoly& a, const NCPoly& b) { return tensor(TensorPoly(a), TensorPoly(b)); }

TensorPoly tensor(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return tensor(tensor(a, b), TensorPoly(c));
}

TensorPoly multiply_slot(const TensorPoly& t, int slot, const NCPoly& a, Side side) {
    if (slot < 0 || slot >= t.rank()) throw AlgebraError("slot index out of range");
    TensorPoly r(t.rank());
    for (const auto& [k, c] : t.terms()) {
        for (const auto& [w, ca] : a.terms()) {
            TensorKey nk = k;
            nk[slot] = side == Side::Left ? w * k[slot] : k[slot] * w;
            r.add_term(std::move(nk), c * ca);
        }
    }
    return r;
}

TensorPoly star(const NCPoly& a, const TensorPoly& t, int i, Side side) {
    if (i < 0 || i > t.rank() - 1) throw AlgebraError("star: jump count out of range");
    int slot = side == Side::Left ? i : t.rank() - 1 - i;
    return multiply_slot(t, slot, a, side);
}

TensorPoly otimes1(const TensorPoly& x, const TensorPoly& y) {
    TensorPoly r(3);
    if (x.rank() == 1 && y.rank() == 2) {
        for (const auto& [kx, cx] : x.terms()) {
            for (const auto& [ky, cy] : y.terms()) r.add_term(TensorKey{ky[0], kx[0], ky[1]}, cx * cy);
        }
    } else if (x.rank() == 2 && y.rank() == 1) {
        for (const auto& [kx, cx] : x.terms()) {
            for (const auto& [ky, cy] : y.terms()) r.add_term(TensorKey{kx[0], ky[0], kx[1]}, cx * cy);
        }
    } else {
        throw AlgebraError("otimes1 needs exactly one rank-2 and one rank-1 argument");
    }
    return r;
}

// ----------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) throw AlgebraError("not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::cycle(std::vector<int> cyc, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t i = 0; i < cyc.size(); ++i) v.at(cyc[i] - 1) = cyc[(i + 1) % cyc.size()];
    return Permutation(v);
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(inv);
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw AlgebraError("permutation size mismatch");
    std::vector<int> v(s.images_.size());
    for (int i = 1; i <= t.size(); ++i) v[i - 1] = s(t(i));
    return Permutation(v);
}

TensorPoly apply_sigma(const Permutation& s, const TensorPoly& t) {
    if (s.size() != t.rank()) throw AlgebraError("permutation size does not match tensor rank");
    TensorPoly r(t.rank());
    for (const auto& [k, c] : t.terms()) {
        TensorKey nk(k.size());
        for (int i = 1; i <= t.rank(); ++i) nk[s(i) - 1] = k[i - 1];
        r.add_term(std::move(nk), c);
    }
    return r;
}

TensorPoly swap(const TensorPoly& t) { return apply_sigma(Permutation({2, 1}), t); }
TensorPoly sigma123(const TensorPoly& t) { return apply_sigma(Permutation({2, 3, 1}), t); }
TensorPoly sigma132(const TensorPoly& t) { return apply_sigma(Permutation({3, 1, 2}), t); }

NCPoly normalize(const std::vector<std::pair<Word, Scalar>>& raw) {
    NCPoly p;
    for (const auto& [w, c] : raw) p.add_term(w, c);
    return p;
}

TensorPoly normalize(int rank, const std::vector<std::pair<TensorKey, Scalar>>& raw) {
    TensorPoly t(rank);
    for (const auto& [k, c] : raw) t.add_term(k, c);
    return t;
}

// ------------------------------------------------------------- rendering

std::string to_string(const Symbol& s) {
    std::string out = s.name();
    for (int k = 0; k < s.jet(); ++k) out = "d(" + out + ")";
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += to_string(w[i]);
    }
    return out;
}

// Renders "c*body" with the sign pulled out; body "1" collapses.
void append_term(std::string& out, const Scalar& c, const std::string& body, bool body_is_unit) {
    Scalar mag = abs(c);
    if (out.empty()) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (body_is_unit) {
        out += scalar_to_string(mag);
    } else if (mag == 1) {
        out += body;
    } else {
        out += scalar_to_string(mag) + "*" + body;
    }
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) append_term(out, c, to_string(w), w.empty());
    return out;
}

std::string to_string(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : t.terms()) {
        std::string body;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) body += " ox ";
            body += to_string(k[i]);
        }
        append_term(out, c, body, t.rank() == 1 && k[0].empty());
    }
    return out;
}

}  // namespace dcalg
