#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postpcp/words.hpp"

namespace postpcp {

struct WordPair {
    Word top;     // u_i
    Word bottom;  // v_i

    friend bool operator==(const WordPair&, const WordPair&) = default;
};

// An ordered list of word pairs addressed 1..n; n is the instance size.
class PcpInstance {
public:
    explicit PcpInstance(std::vector<WordPair> pairs);

    std::size_t size() const noexcept { return pairs_.size(); }
    const std::vector<WordPair>& pairs() const noexcept { return pairs_; }
    // 1-based; throws InputError when out of range.
    const WordPair& pair(std::size_t index) const;

    friend bool operator==(const PcpInstance&, const PcpInstance&) = default;

private:
    std::vector<WordPair> pairs_;
};

struct PcpSolution {
    std::vector<std::size_t> indices;

    friend bool operator==(const PcpSolution&, const PcpSolution&) = default;
    friend auto operator<=>(const PcpSolution&, const PcpSolution&) = default;
};

// "1,5,3,6"
std::string format_indices(const std::vector<std::size_t>& indices);
std::vector<std::size_t> parse_indices(std::string_view csv);

// Throws InputError for an index outside 1..n; an empty sequence is simply false.
bool verify_solution(const PcpInstance& inst, const std::vector<std::size_t>& indices);

enum class Side : char { top = 't', bottom = 'b' };

// Search state: which side is ahead and by which unmatched suffix.
struct OverhangState {
    Side leader = Side::top;
    Word residual;

    friend bool operator==(const OverhangState&, const OverhangState&) = default;
};

// Appends one pair to a state. nullopt when the shorter side disagrees with
// the overhang. A solution point is a result with an empty residual.
std::optional<OverhangState> extend(const OverhangState& state, const WordPair& pair);

// Shortest solution by breadth-first search over overhang states, memoized on
// (leader, residual). Ties go to the smallest pair index at the earliest
// divergence. nullopt means "none within bounds". Frontier expansion runs
// level-synchronously across OpenMP threads; the answer is identical to
// serial::solve_bounded.
std::optional<PcpSolution> solve_bounded(const PcpInstance& inst, std::size_t max_indices, std::size_t max_overhang);

// Every solution with at most max_indices indices, in lexicographic order.
// Plain depth-first search, no memoization, no overhang bound.
std::vector<PcpSolution> enumerate_solutions(const PcpInstance& inst, std::size_t max_indices);

namespace serial {
// Single-threaded FIFO reference for solve_bounded.
std::optional<PcpSolution> solve_bounded(const PcpInstance& inst, std::size_t max_indices, std::size_t max_overhang);
} // namespace serial

// Instances over an indexed alphabet a_1..a_k and their binary image under phi.
struct IndexedPair {
    IndexedWord top;
    IndexedWord bottom;
};

struct IndexedPcpInstance {
    std::size_t alphabet_size = 1;
    std::vector<IndexedPair> pairs;
};

bool verify_indexed_solution(const IndexedPcpInstance& inst, const std::vector<std::size_t>& indices);
PcpInstance phi_encode_instance(const IndexedPcpInstance& inst);

} // namespace postpcp
