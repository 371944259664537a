#include "postpcp/family.hpp"

#include <set>
#include <string>

namespace postpcp {

Word random_word(std::mt19937_64& rng, std::span<const Letter> alphabet, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    Word w;
    for (std::size_t n = len(rng); n > 0; --n) w += alphabet[pick(rng)];
    return w;
}

NormalSystem random_system(std::mt19937_64& rng, const FamilyParams& params) {
    static constexpr Letter base[] = {Letter::a, Letter::b};
    std::uniform_int_distribution<std::size_t> rule_count(1, params.max_rules);
    std::vector<NormalRule> rules(rule_count(rng));
    for (auto& r : rules) {
        r.alpha = random_word(rng, base, 1, params.max_side);
        r.beta = random_word(rng, base, 1, params.max_side);
    }
    Word initial = random_word(rng, base, 1, params.max_initial);
    return NormalSystem(std::move(initial), std::move(rules));
}

std::vector<NormalSystem> system_family(std::uint64_t seed, std::size_t count, const FamilyParams& params) {
    std::mt19937_64 rng(seed);
    std::vector<NormalSystem> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        NormalSystem sys = random_system(rng, params);
        std::string key = sys.initial().str();
        for (const auto& r : sys.rules()) key += "|" + r.alpha.str() + ">" + r.beta.str();
        if (seen.insert(key).second) out.push_back(std::move(sys));
    }
    return out;
}

std::vector<Word> all_words(std::span<const Letter> alphabet, std::size_t min_len, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(layer.size() * alphabet.size());
        for (const auto& w : layer) {
            for (Letter l : alphabet) next.push_back(w + l);
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace postpcp
