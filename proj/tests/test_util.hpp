#ifndef QGB_TEST_UTIL_HPP
#define QGB_TEST_UTIL_HPP

#include <random>

#include "qgb/qspace.hpp"

namespace qgb::testutil {

inline Word random_word(std::mt19937_64& rng, int alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<Letter> letter_dist(0, alphabet - 1);
    Word w;
    const std::size_t len = len_dist(rng);
    w.letters.reserve(len);
    for (std::size_t k = 0; k < len; ++k) w.letters.push_back(letter_dist(rng));
    return w;
}

inline LaurentMonomial random_monomial(std::mt19937_64& rng, int n_params) {
    std::uniform_int_distribution<int> count_dist(0, n_params);
    std::uniform_int_distribution<int> id_dist(0, n_params - 1);
    std::uniform_int_distribution<std::int64_t> exp_dist(-4, 4);
    std::vector<LaurentMonomial::Entry> entries;
    const int count = count_dist(rng);
    for (int k = 0; k < count; ++k)
        entries.emplace_back(static_cast<ParamId>(id_dist(rng)), exp_dist(rng));
    return LaurentMonomial::from_entries(std::move(entries));
}

/// Assignment sending every parameter of the set to 1.
inline ParamAssignment all_ones(const ParamSet& params) {
    ParamAssignment a;
    for (std::size_t k = 0; k < params.size(); ++k) a.set(static_cast<ParamId>(k), 1);
    return a;
}

}  // namespace qgb::testutil

#endif
