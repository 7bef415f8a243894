#include "dcalg/sampling.hpp"

namespace dcalg {

Scalar Rng::small_coefficient() {
    static const Scalar choices[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-3), Scalar(1, 2), Scalar(-2, 3)};
    return choices[below(std::size(choices))];
}

std::vector<Word> all_words(const std::vector<Symbol>& alphabet, int min_len, int max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word()};
    for (int len = 0; len <= max_len; ++len) {
        if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len || alphabet.empty()) break;
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (const auto& s : alphabet) next.push_back(w * Word(s));
        }
        layer = std::move(next);
    }
    return out;
}

Word random_word(Rng& rng, const std::vector<Symbol>& alphabet, int min_len, int max_len) {
    int len = alphabet.empty() ? 0 : rng.between(min_len, max_len);
    std::vector<Symbol> f;
    for (int i = 0; i < len; ++i) f.push_back(rng.pick(alphabet));
    return Word(f);
}

NCPoly random_poly(Rng& rng, const std::vector<Symbol>& alphabet, int min_len, int max_len, int max_terms) {
    NCPoly p;
    int n = rng.between(1, max_terms);
    for (int i = 0; i < n; ++i) p.add_term(random_word(rng, alphabet, min_len, max_len), rng.small_coefficient());
    return p;
}

}  // namespace dcalg
