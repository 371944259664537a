#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "postpcp/normal_system.hpp"
#include "postpcp/pcp.hpp"
#include "postpcp/reductions.hpp"

namespace postpcp {

// A verified PCP solution whose role sequence does not have the canonical
// shape. This is a result, not an error: for the split-rule construction it
// is a counterexample to the claim that every solution encodes a derivation.
struct MalformedSolution {
    std::size_t position = 0;  // 1-based offset into the index sequence
    std::string reason;
};

template <typename T>
using Checked = std::variant<T, MalformedSolution>;

struct SolutionParse {
    std::vector<std::pair<std::size_t, PairRole>> segments;
    // Split-rule construction: the word f w c^{i1} f x1 beta_{i1} ... whose
    // ell_d / r_d images the two sides spell.
    Word recovered;
};

// Role-annotates a solution of a split-rule instance and checks the block
// shape start (rule-alpha(i) copies* rule-beta(i))* end.
Checked<SolutionParse> parse_solution(const ReductionArtifact& art, const PcpSolution& sol);

// Start, then per step rule-alpha(i_j), one copy pair per letter of x_j,
// rule-beta(i_j), then end. Split-rule artifacts only (UnsupportedError
// otherwise); the derivation must start at the source's initial word, reach
// the artifact target and take at least one step (InputError otherwise).
PcpSolution embed_derivation(const ReductionArtifact& art, const Derivation& d);

// Inverse of embed_derivation. Throws InputError when sol is not a solution.
Checked<Derivation> extract_derivation(const ReductionArtifact& art, const PcpSolution& sol);

// Post artifacts: maps S1 rule indices (see build_s1) to pair indices and wraps them in start/end.
PcpSolution embed_s1_indices(const ReductionArtifact& art, const std::vector<std::size_t>& s1_indices);

// Post artifacts: strips the desynchronization to recover the S1 rule
// sequence, then checks rev(w)c delta... = gamma... rev(u)c together with the
// prefix length condition. Throws InputError when sol is not a solution.
Checked<bool> verify_post_reduction(const ReductionArtifact& art, const PcpSolution& sol);

struct SearchBounds {
    std::size_t max_steps = 32;
    std::size_t max_word_len = 64;
};

struct PcpBounds {
    std::size_t max_indices = 64;
    std::size_t max_overhang = 128;
};

// Bounds under which solve_bounded must find the embedding of d:
// depth 2 + 2k + sum |x_j|, overhang 2(|fw| + sum_j (i_j + 1 + |x_j| + |beta_{i_j}|)) + 3.
PcpBounds forward_bounds(const NormalSystem& sys, const Derivation& d);

enum class Verdict { both_found, both_absent, mismatch };

std::string_view verdict_name(Verdict v) noexcept;

struct ExperimentReport {
    Verdict verdict = Verdict::both_absent;
    bool zero_step = false;  // target equals the initial word
    std::optional<Derivation> derivation;  // from derive_bounded
    std::optional<PcpSolution> solution;   // from solve_bounded on the split-rule instance
    std::optional<Derivation> extracted;   // parsed back out of solution
    std::string details;
};

// derive_bounded against solve_bounded on reduce_new(sys, u). When a
// derivation is found the PCP bounds are raised to forward_bounds(d).
ExperimentReport equivalence_experiment(const NormalSystem& sys, const Word& target, const SearchBounds& search,
                                        const PcpBounds& pcp);

std::string format_derivation(const Derivation& d);
// "case <id>: BothFound|BothAbsentWithinBounds|Mismatch <details>"
std::string format_report_line(std::string_view id, const ExperimentReport& report);

struct ExperimentCase {
    std::string id;
    NormalSystem system;
    Word target;
};

// Runs every case; results are in case order regardless of scheduling.
std::vector<ExperimentReport> run_experiments(const std::vector<ExperimentCase>& cases, const SearchBounds& search,
                                              const PcpBounds& pcp);

namespace serial {
std::vector<ExperimentReport> run_experiments(const std::vector<ExperimentCase>& cases, const SearchBounds& search,
                                              const PcpBounds& pcp);
} // namespace serial

} // namespace postpcp
