#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "postpcp/words.hpp"

namespace postpcp {

// base: words over {a,b}; extended: {a,b,c} (systems built by the Post reduction).
enum class AlphabetTier { base, extended };

// alpha X -> X beta. Both sides nonempty.
struct NormalRule {
    Word alpha;
    Word beta;

    friend bool operator==(const NormalRule&, const NormalRule&) = default;
};

// A normal system S = (w, P). Rules are addressed 1..t in list order.
class NormalSystem {
public:
    NormalSystem(Word initial, std::vector<NormalRule> rules, AlphabetTier tier = AlphabetTier::base);

    const Word& initial() const noexcept { return initial_; }
    const std::vector<NormalRule>& rules() const noexcept { return rules_; }
    AlphabetTier tier() const noexcept { return tier_; }
    std::size_t rule_count() const noexcept { return rules_.size(); }
    // 1-based.
    const NormalRule& rule(std::size_t index) const;
    bool admits(const Word& w) const noexcept;

    friend bool operator==(const NormalSystem&, const NormalSystem&) = default;

private:
    Word initial_;
    std::vector<NormalRule> rules_;
    AlphabetTier tier_;
};

struct DerivationStep {
    std::size_t rule = 0;  // 1-based rule index
    Word remainder;        // x_j: previous word = alpha . x_j, next word = x_j . beta

    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Derivation {
    Word start;
    std::vector<DerivationStep> steps;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct Successor {
    std::size_t rule;
    Word word;

    friend bool operator==(const Successor&, const Successor&) = default;
};

std::vector<Successor> successors(const NormalSystem& sys, const Word& v);

// Replays d from d.start. A zero-step derivation is valid iff start == target.
bool check_derivation(const NormalSystem& sys, const Derivation& d, const Word& target);

// Breadth-first search from the initial word; rules tried in index order,
// visited words memoized, words longer than max_word_len pruned. Returns a
// shortest derivation, or nullopt meaning "not reachable within these bounds"
// (never "not in the assertion set": that question is undecidable).
std::optional<Derivation> derive_bounded(const NormalSystem& sys, const Word& target, std::size_t max_steps,
                                         std::size_t max_word_len);

std::set<Word> assertion_bounded(const NormalSystem& sys, std::size_t max_steps, std::size_t max_word_len);

// The two-condition characterization of derivability along a rule sequence:
//   w beta_{i1}..beta_{ik} = alpha_{i1}..alpha_{ik} target
//   |w beta_{i1}..beta_{i(j-1)}| >= |alpha_{i1}..alpha_{ij}|  for j = 1..k
// Throws InputError on an empty sequence or an index outside 1..t.
bool check_post_conditions(const NormalSystem& sys, const Word& target, const std::vector<std::size_t>& indices);

// Reads the remainders x_j off the characterization by peeling alpha prefixes.
// nullopt when the conditions fail.
std::optional<Derivation> derivation_from_indices(const NormalSystem& sys, const Word& target,
                                                  const std::vector<std::size_t>& indices);

std::vector<std::size_t> indices_from_derivation(const Derivation& d);

// Final word of a replay, or nullopt if some step does not apply.
std::optional<Word> replay(const NormalSystem& sys, const Derivation& d);

} // namespace postpcp
