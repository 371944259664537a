#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the search code it is used to check.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postpcp/normal_system.hpp"
#include "postpcp/pcp.hpp"

namespace oracle {

inline std::string ell(const std::string& v) {
    std::string out;
    for (char ch : v) out += std::string("d") + ch;
    return out;
}

inline std::string right(const std::string& v) {
    std::string out;
    for (char ch : v) out += std::string(1, ch) + "d";
    return out;
}

// All index sequences of length 1..k over 1..n, generate-and-test.
inline std::vector<std::vector<std::size_t>> pcp_solutions(const postpcp::PcpInstance& inst, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& seq : layer) {
            for (std::size_t i = 1; i <= inst.size(); ++i) {
                auto s = seq;
                s.push_back(i);
                std::string top, bottom;
                for (std::size_t j : s) {
                    top += inst.pairs()[j - 1].top.str();
                    bottom += inst.pairs()[j - 1].bottom.str();
                }
                if (top == bottom) out.push_back(s);
                next.push_back(std::move(s));
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Words reachable in at most `steps` rewrites, level by level, never keeping
// a word longer than max_len.
inline std::set<std::string> reachable(const postpcp::NormalSystem& sys, std::size_t steps, std::size_t max_len) {
    std::set<std::string> all{sys.initial().str()};
    std::set<std::string> level = all;
    for (std::size_t s = 0; s < steps; ++s) {
        std::set<std::string> next;
        for (const auto& w : level) {
            for (const auto& r : sys.rules()) {
                const auto& a = r.alpha.str();
                if (w.compare(0, a.size(), a) != 0) continue;
                std::string v = w.substr(a.size()) + r.beta.str();
                if (v.size() <= max_len) next.insert(v);
            }
        }
        all.insert(next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

// Rewrites the initial word along a rule sequence; nullopt when a rule does not apply.
inline std::optional<std::string> rewrite(const postpcp::NormalSystem& sys, const std::vector<std::size_t>& seq) {
    std::string w = sys.initial().str();
    for (std::size_t i : seq) {
        const auto& r = sys.rules()[i - 1];
        if (w.rfind(r.alpha.str(), 0) != 0) return std::nullopt;
        w = w.substr(r.alpha.size()) + r.beta.str();
    }
    return w;
}

// Every sequence over 1..t of length 1..k.
inline std::vector<std::vector<std::size_t>> sequences(std::size_t t, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& seq : layer) {
            for (std::size_t i = 1; i <= t; ++i) {
                auto s = seq;
                s.push_back(i);
                out.push_back(s);
                next.push_back(std::move(s));
            }
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace oracle
