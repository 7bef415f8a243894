#include "dcalg/cpoly.hpp"

#include <algorithm>
#include <tuple>

namespace dcalg {

IndexedSym::IndexedSym(Symbol base, int row, int col) : base_(std::move(base)), row_(row), col_(col) {
    if (row < 1 || col < 1) throw AlgebraError("matrix indices start at 1");
}

bool operator<(const IndexedSym& a, const IndexedSym& b) {
    if (a.base_ == b.base_) return std::tie(a.row_, a.col_) < std::tie(b.row_, b.col_);
    return a.base_ < b.base_;
}

std::string to_string(const IndexedSym& s) {
    return to_string(s.base()) + "_" + std::to_string(s.row()) + std::to_string(s.col());
}

CPoly::CPoly(const Scalar& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

CPoly::CPoly(const IndexedSym& s) { terms_.emplace(Monomial{s}, Scalar(1)); }

void CPoly::add(Monomial m, const Scalar& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int CPoly::homogeneous_e_degree() const {
    int deg = -2;
    for (const auto& [m, c] : terms_) {
        int k = static_cast<int>(std::count_if(m.begin(), m.end(), [](const IndexedSym& s) { return s.sort() == Sort::E; }));
        if (deg == -2) deg = k;
        else if (deg != k) return -1;
    }
    return deg == -2 ? 0 : deg;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

CPoly& CPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            CPoly::Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add(std::move(m), ca * cb);
        }
    }
    return r;
}

std::string to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string body;
        for (const auto& s : m) body += (body.empty() ? "" : "*") + to_string(s);
        append_term(out, c, body, m.empty());
    }
    return out;
}

}  // namespace dcalg
