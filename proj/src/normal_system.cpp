#include "postpcp/normal_system.hpp"

#include <deque>
#include <string>
#include <unordered_map>

namespace postpcp {

namespace {

bool word_in_tier(const Word& w, AlphabetTier tier) {
    if (w.contains(Letter::d) || w.contains(Letter::f)) return false;
    return tier == AlphabetTier::extended || !w.contains(Letter::c);
}

const char* tier_name(AlphabetTier tier) { return tier == AlphabetTier::base ? "{a,b}" : "{a,b,c}"; }

} // namespace

NormalSystem::NormalSystem(Word initial, std::vector<NormalRule> rules, AlphabetTier tier)
    : initial_(std::move(initial)), rules_(std::move(rules)), tier_(tier) {
    if (initial_.empty()) throw InputError("normal system initial word must be nonempty");
    if (!word_in_tier(initial_, tier_)) {
        throw InputError("initial word " + initial_.str() + " is not over " + tier_name(tier_));
    }
    if (rules_.empty()) throw InputError("normal system needs at least one rule");
    for (std::size_t j = 0; j < rules_.size(); ++j) {
        const auto& r = rules_[j];
        const std::string where = "rule " + std::to_string(j + 1) + ": ";
        if (r.alpha.empty() || r.beta.empty()) throw InputError(where + "alpha and beta must be nonempty");
        if (!word_in_tier(r.alpha, tier_) || !word_in_tier(r.beta, tier_)) {
            throw InputError(where + "words must be over " + tier_name(tier_));
        }
    }
}

const NormalRule& NormalSystem::rule(std::size_t index) const {
    if (index < 1 || index > rules_.size()) {
        throw InputError("rule index " + std::to_string(index) + " outside 1.." + std::to_string(rules_.size()));
    }
    return rules_[index - 1];
}

bool NormalSystem::admits(const Word& w) const noexcept { return word_in_tier(w, tier_); }

std::vector<Successor> successors(const NormalSystem& sys, const Word& v) {
    std::vector<Successor> out;
    for (std::size_t j = 1; j <= sys.rule_count(); ++j) {
        const auto& r = sys.rule(j);
        if (v.starts_with(r.alpha)) out.push_back({j, v.suffix_from(r.alpha.size()) + r.beta});
    }
    return out;
}

std::optional<Word> replay(const NormalSystem& sys, const Derivation& d) {
    Word current = d.start;
    for (const auto& step : d.steps) {
        if (step.rule < 1 || step.rule > sys.rule_count()) return std::nullopt;
        const auto& r = sys.rule(step.rule);
        if (current != r.alpha + step.remainder) return std::nullopt;
        current = step.remainder + r.beta;
    }
    return current;
}

bool check_derivation(const NormalSystem& sys, const Derivation& d, const Word& target) {
    auto final_word = replay(sys, d);
    return final_word && *final_word == target;
}

namespace {

struct Visit {
    std::size_t depth;
    const Word* parent;  // stable: node-based map
    std::size_t rule;
    Word remainder;
};

// Shared BFS core; stops as soon as on_visit returns true.
template <typename OnVisit>
void bfs(const NormalSystem& sys, std::size_t max_steps, std::size_t max_word_len,
         std::unordered_map<Word, Visit>& visited, OnVisit&& on_visit) {
    std::deque<const Word*> queue;
    auto [root, _] = visited.emplace(sys.initial(), Visit{0, nullptr, 0, Word{}});
    if (on_visit(root->first)) return;
    queue.push_back(&root->first);
    while (!queue.empty()) {
        const Word* current = queue.front();
        queue.pop_front();
        const std::size_t depth = visited.at(*current).depth;
        if (depth >= max_steps) continue;
        for (const auto& r : sys.rules()) {
            if (!current->starts_with(r.alpha)) continue;
            Word remainder = current->suffix_from(r.alpha.size());
            Word next = remainder + r.beta;
            if (next.size() > max_word_len || visited.contains(next)) continue;
            const std::size_t rule_index = static_cast<std::size_t>(&r - sys.rules().data()) + 1;
            auto [it, inserted] = visited.emplace(std::move(next), Visit{depth + 1, current, rule_index, std::move(remainder)});
            if (on_visit(it->first)) return;
            queue.push_back(&it->first);
        }
    }
}

} // namespace

std::optional<Derivation> derive_bounded(const NormalSystem& sys, const Word& target, std::size_t max_steps,
                                         std::size_t max_word_len) {
    std::unordered_map<Word, Visit> visited;
    const Word* hit = nullptr;
    bfs(sys, max_steps, max_word_len, visited, [&](const Word& w) {
        if (w == target) hit = &w;
        return hit != nullptr;
    });
    if (!hit) return std::nullopt;

    std::vector<DerivationStep> reversed;
    for (const Word* w = hit; visited.at(*w).parent != nullptr; w = visited.at(*w).parent) {
        const auto& v = visited.at(*w);
        reversed.push_back({v.rule, v.remainder});
    }
    Derivation d{sys.initial(), {reversed.rbegin(), reversed.rend()}};
    return d;
}

std::set<Word> assertion_bounded(const NormalSystem& sys, std::size_t max_steps, std::size_t max_word_len) {
    std::unordered_map<Word, Visit> visited;
    std::set<Word> out;
    bfs(sys, max_steps, max_word_len, visited, [&](const Word& w) {
        out.insert(w);
        return false;
    });
    return out;
}

bool check_post_conditions(const NormalSystem& sys, const Word& target, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw InputError("rule index sequence must be nonempty");
    Word betas = sys.initial();  // w beta_{i1} .. beta_{i(j-1)}
    std::size_t alpha_len = 0;   // |alpha_{i1} .. alpha_{ij}|
    Word alphas;
    for (std::size_t i : indices) {
        const auto& r = sys.rule(i);
        alpha_len += r.alpha.size();
        if (betas.size() < alpha_len) return false;
        alphas += r.alpha;
        betas += r.beta;
    }
    return betas == alphas + target;
}

std::optional<Derivation> derivation_from_indices(const NormalSystem& sys, const Word& target,
                                                  const std::vector<std::size_t>& indices) {
    if (!check_post_conditions(sys, target, indices)) return std::nullopt;
    Derivation d{sys.initial(), {}};
    Word current = sys.initial();
    for (std::size_t i : indices) {
        const auto& r = sys.rule(i);
        if (!current.starts_with(r.alpha)) return std::nullopt;
        Word remainder = current.suffix_from(r.alpha.size());
        current = remainder + r.beta;
        d.steps.push_back({i, std::move(remainder)});
    }
    if (current != target) return std::nullopt;
    return d;
}

std::vector<std::size_t> indices_from_derivation(const Derivation& d) {
    std::vector<std::size_t> out;
    out.reserve(d.steps.size());
    for (const auto& s : d.steps) out.push_back(s.rule);
    return out;
}

} // namespace postpcp
