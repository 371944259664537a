#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "postpcp/normal_system.hpp"
#include "postpcp/pcp.hpp"

namespace postpcp {

enum class ReductionMethod { post, fresh };  // fresh: the split-rule construction ("new")

std::string_view method_name(ReductionMethod m) noexcept;
ReductionMethod parse_method(std::string_view name);

// What a pair of a reduced instance stands for.
struct PairRole {
    enum class Kind { start, end, copy_a, copy_b, copy_c, rule_whole, rule_alpha, rule_beta };

    Kind kind = Kind::start;
    std::size_t rule = 0;  // source rule index for the rule_* kinds, 0 otherwise

    friend bool operator==(const PairRole&, const PairRole&) = default;
};

// "start", "end", "copy-a", "copy-b", "copy-c", "rule(j)", "rule-alpha(j)", "rule-beta(j)"
std::string format_role(const PairRole& role);
PairRole parse_role(std::string_view text);

struct ReductionArtifact {
    NormalSystem source;
    Word target;
    ReductionMethod method;
    PcpInstance instance;
    std::vector<PairRole> roles;  // roles[i - 1] describes pair i

    const PairRole& role(std::size_t pair_index) const { return roles.at(pair_index - 1); }
    // Pair index carrying a given role; throws InputError if there is none.
    std::size_t index_of(const PairRole& role) const;
};

// Post's auxiliary system over reversed words with the cyclic-shift rules:
// initial rev(w)c, rules rev(alpha)c X -> X c rev(beta) for each source rule,
// then aX -> Xa, bX -> Xb, cX -> Xc.
NormalSystem build_s1(const NormalSystem& sys);

// Pair order: start, end, copy a/b/c, then one pair per source rule. Size t + 5.
ReductionArtifact reduce_post(const NormalSystem& sys, const Word& target);

// Pair order: start, end, copy a/b, then rule_alpha(j), rule_beta(j) for
// j = 1..t at indices 2j+3, 2j+4. Size 2t + 4.
ReductionArtifact reduce_new(const NormalSystem& sys, const Word& target);

ReductionArtifact reduce(const NormalSystem& sys, const Word& target, ReductionMethod method);

struct SizeReport {
    std::size_t post_size;
    std::size_t new_size;
};

SizeReport size_report(const NormalSystem& sys);

} // namespace postpcp
