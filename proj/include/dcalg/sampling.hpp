// Seeded generators for words and polynomials, plus shared check options.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dcalg/ncpoly.hpp"

namespace dcalg {

// Which symmetry a double bracket is expected to satisfy.
enum class Convention {
    Paper,  // {{a,b}} = {{b,a}}^sigma
    VdB     // {{a,b}} = -{{b,a}}^sigma
};

struct CheckOptions {
    std::uint64_t seed = 1;
    int samples = 64;
    int max_degree = 3;
    Convention convention = Convention::Paper;
    int lambda_cap = 8;
    // Also sweep every monomial tuple up to max_degree.
    bool exhaustive = false;
};

// Thin wrapper over mt19937_64 whose draws do not depend on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return below(2) == 1; }
    Scalar small_coefficient();
    template <class T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw AlgebraError("cannot pick from an empty list");
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

// All words over `alphabet` with length in [min_len, max_len], canonical order.
std::vector<Word> all_words(const std::vector<Symbol>& alphabet, int min_len, int max_len);

Word random_word(Rng& rng, const std::vector<Symbol>& alphabet, int min_len, int max_len);

// Sum of up to `max_terms` random words with small nonzero coefficients.
NCPoly random_poly(Rng& rng, const std::vector<Symbol>& alphabet, int min_len, int max_len, int max_terms);

}  // namespace dcalg
