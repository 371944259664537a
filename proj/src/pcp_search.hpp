#pragma once

// State-key helpers shared by the parallel and serial overhang searches.
// A key is the leader tag ('t' or 'b') followed by the residual letters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postpcp/pcp.hpp"

namespace postpcp::detail {

inline constexpr std::uint32_t kNoParent = UINT32_MAX;

inline std::string root_key() { return std::string(1, static_cast<char>(Side::top)); }

inline std::optional<std::string> step(std::string_view key, const WordPair& pair) {
    const bool top_leads = key.front() == static_cast<char>(Side::top);
    const std::string_view residual = key.substr(1);
    std::string top_side(top_leads ? residual : std::string_view{});
    top_side += pair.top.view();
    std::string bottom_side(top_leads ? std::string_view{} : residual);
    bottom_side += pair.bottom.view();
    if (std::string_view(top_side).starts_with(bottom_side)) {
        top_side.replace(0, bottom_side.size(), 1, static_cast<char>(Side::top));
        return top_side;
    }
    if (std::string_view(bottom_side).starts_with(top_side)) {
        bottom_side.replace(0, top_side.size(), 1, static_cast<char>(Side::bottom));
        return bottom_side;
    }
    return std::nullopt;
}

inline bool solved(std::string_view key) { return key.size() == 1; }

struct Node {
    std::uint32_t parent;
    std::uint32_t pair;  // 1-based index of the pair that produced this node
};

inline PcpSolution reconstruct(const std::vector<Node>& nodes, std::uint32_t last, std::size_t final_pair) {
    std::vector<std::size_t> rev{final_pair};
    for (std::uint32_t n = last; nodes[n].parent != kNoParent; n = nodes[n].parent) rev.push_back(nodes[n].pair);
    return PcpSolution{{rev.rbegin(), rev.rend()}};
}

} // namespace postpcp::detail
