#include <deque>
#include <unordered_map>

#include "pcp_search.hpp"

namespace postpcp::serial {

std::optional<PcpSolution> solve_bounded(const PcpInstance& inst, std::size_t max_indices, std::size_t max_overhang) {
    struct Entry {
        std::uint32_t id;
        std::size_t depth;
        const std::string* key;
    };
    std::vector<detail::Node> nodes{{detail::kNoParent, 0}};
    std::unordered_map<std::string, std::uint32_t> visited{{detail::root_key(), 0}};
    std::deque<Entry> queue{{0, 0, &visited.begin()->first}};

    while (!queue.empty()) {
        const Entry e = queue.front();
        queue.pop_front();
        if (e.depth >= max_indices) continue;
        for (std::size_t i = 1; i <= inst.size(); ++i) {
            auto next = detail::step(*e.key, inst.pair(i));
            if (!next) continue;
            if (detail::solved(*next)) return detail::reconstruct(nodes, e.id, i);
            if (next->size() - 1 > max_overhang) continue;
            const auto id = static_cast<std::uint32_t>(nodes.size());
            auto [it, inserted] = visited.emplace(std::move(*next), id);
            if (!inserted) continue;
            nodes.push_back({e.id, static_cast<std::uint32_t>(i)});
            queue.push_back({id, e.depth + 1, &it->first});
        }
    }
    return std::nullopt;
}

} // namespace postpcp::serial
