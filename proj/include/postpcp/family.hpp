#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "postpcp/normal_system.hpp"
#include "postpcp/words.hpp"

namespace postpcp {

// Shape of randomly generated small systems over {a,b}.
struct FamilyParams {
    std::size_t max_rules = 3;
    std::size_t max_side = 2;     // |alpha|, |beta| in 1..max_side
    std::size_t max_initial = 3;  // |w| in 1..max_initial
};

NormalSystem random_system(std::mt19937_64& rng, const FamilyParams& params);

// `count` pairwise distinct systems, reproducible from the seed.
std::vector<NormalSystem> system_family(std::uint64_t seed, std::size_t count, const FamilyParams& params = {});

// All words over `alphabet` with length in [min_len, max_len], shortlex order.
std::vector<Word> all_words(std::span<const Letter> alphabet, std::size_t min_len, std::size_t max_len);

Word random_word(std::mt19937_64& rng, std::span<const Letter> alphabet, std::size_t min_len, std::size_t max_len);

} // namespace postpcp
