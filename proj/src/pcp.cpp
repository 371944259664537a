#include "postpcp/pcp.hpp"

#include <charconv>
#include <unordered_map>

#include "pcp_search.hpp"

namespace postpcp {

PcpInstance::PcpInstance(std::vector<WordPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw InputError("PCP instance needs at least one pair");
}

const WordPair& PcpInstance::pair(std::size_t index) const {
    if (index < 1 || index > pairs_.size()) {
        throw InputError("pair index " + std::to_string(index) + " outside 1.." + std::to_string(pairs_.size()));
    }
    return pairs_[index - 1];
}

std::string format_indices(const std::vector<std::size_t>& indices) {
    std::string out;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(indices[k]);
    }
    return out;
}

std::vector<std::size_t> parse_indices(std::string_view csv) {
    std::vector<std::size_t> out;
    while (!csv.empty()) {
        const auto comma = csv.find(',');
        std::string_view item = csv.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw InputError("bad index list entry '" + std::string(item) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
        if (csv.empty()) throw InputError("trailing comma in index list");
    }
    return out;
}

bool verify_solution(const PcpInstance& inst, const std::vector<std::size_t>& indices) {
    std::string top, bottom;
    for (std::size_t i : indices) {
        const auto& p = inst.pair(i);
        top += p.top.view();
        bottom += p.bottom.view();
    }
    return !indices.empty() && top == bottom;
}

std::optional<OverhangState> extend(const OverhangState& state, const WordPair& pair) {
    std::string key(1, static_cast<char>(state.leader));
    key += state.residual.view();
    auto next = detail::step(key, pair);
    if (!next) return std::nullopt;
    return OverhangState{static_cast<Side>(next->front()), Word(std::string_view(*next).substr(1))};
}

namespace {

// Frontiers smaller than this are expanded on the calling thread.
constexpr std::size_t kParallelFrontier = 256;

struct Child {
    std::uint32_t pair;
    std::string key;  // "" marks a solution point
};

} // namespace

std::optional<PcpSolution> solve_bounded(const PcpInstance& inst, std::size_t max_indices, std::size_t max_overhang) {
    const auto& pairs = inst.pairs();
    std::vector<detail::Node> nodes{{detail::kNoParent, 0}};
    std::unordered_map<std::string, std::uint32_t> visited{{detail::root_key(), 0}};
    std::vector<std::uint32_t> frontier{0};
    std::vector<const std::string*> frontier_keys{&visited.begin()->first};

    for (std::size_t depth = 0; depth < max_indices && !frontier.empty(); ++depth) {
        std::vector<std::vector<Child>> children(frontier.size());
        const auto width = static_cast<std::int64_t>(frontier.size());

        // visited is only read here; all inserts happen in the ordered merge below.
#pragma omp parallel for schedule(dynamic, 32) if (frontier.size() >= kParallelFrontier)
        for (std::int64_t f = 0; f < width; ++f) {
            auto& out = children[f];
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto next = detail::step(*frontier_keys[f], pairs[i]);
                if (!next) continue;
                if (detail::solved(*next)) {
                    out.push_back({static_cast<std::uint32_t>(i + 1), {}});
                    break;
                }
                if (next->size() - 1 > max_overhang || visited.contains(*next)) continue;
                out.push_back({static_cast<std::uint32_t>(i + 1), std::move(*next)});
            }
        }

        std::vector<std::uint32_t> next_frontier;
        std::vector<const std::string*> next_keys;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            for (auto& child : children[f]) {
                if (child.key.empty()) return detail::reconstruct(nodes, frontier[f], child.pair);
                const auto id = static_cast<std::uint32_t>(nodes.size());
                auto [it, inserted] = visited.emplace(std::move(child.key), id);
                if (!inserted) continue;
                nodes.push_back({frontier[f], child.pair});
                next_frontier.push_back(id);
                next_keys.push_back(&it->first);
            }
        }
        frontier = std::move(next_frontier);
        frontier_keys = std::move(next_keys);
    }
    return std::nullopt;
}

namespace {

void enumerate_from(const PcpInstance& inst, const std::string& key, std::size_t remaining,
                    std::vector<std::size_t>& path, std::vector<PcpSolution>& out) {
    if (remaining == 0) return;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        auto next = detail::step(key, inst.pair(i));
        if (!next) continue;
        path.push_back(i);
        if (detail::solved(*next)) out.push_back(PcpSolution{path});
        enumerate_from(inst, *next, remaining - 1, path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<PcpSolution> enumerate_solutions(const PcpInstance& inst, std::size_t max_indices) {
    std::vector<PcpSolution> out;
    std::vector<std::size_t> path;
    enumerate_from(inst, detail::root_key(), max_indices, path, out);
    return out;
}

namespace {

std::vector<std::size_t> concat_symbols(const IndexedPcpInstance& inst, const std::vector<std::size_t>& indices,
                                        bool top) {
    std::vector<std::size_t> out;
    for (std::size_t i : indices) {
        if (i < 1 || i > inst.pairs.size()) {
            throw InputError("pair index " + std::to_string(i) + " outside 1.." + std::to_string(inst.pairs.size()));
        }
        const auto& w = top ? inst.pairs[i - 1].top : inst.pairs[i - 1].bottom;
        out.insert(out.end(), w.symbols.begin(), w.symbols.end());
    }
    return out;
}

} // namespace

bool verify_indexed_solution(const IndexedPcpInstance& inst, const std::vector<std::size_t>& indices) {
    return !indices.empty() && concat_symbols(inst, indices, true) == concat_symbols(inst, indices, false);
}

PcpInstance phi_encode_instance(const IndexedPcpInstance& inst) {
    std::vector<WordPair> pairs;
    pairs.reserve(inst.pairs.size());
    for (const auto& p : inst.pairs) {
        pairs.push_back({phi_encode({inst.alphabet_size, p.top.symbols}),
                         phi_encode({inst.alphabet_size, p.bottom.symbols})});
    }
    return PcpInstance(std::move(pairs));
}

} // namespace postpcp
