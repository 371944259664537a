#include "postpcp/reductions.hpp"

#include <charconv>

namespace postpcp {

std::string_view method_name(ReductionMethod m) noexcept { return m == ReductionMethod::post ? "post" : "new"; }

ReductionMethod parse_method(std::string_view name) {
    if (name == "post") return ReductionMethod::post;
    if (name == "new") return ReductionMethod::fresh;
    throw InputError("unknown reduction method '" + std::string(name) + "' (expected new or post)");
}

namespace {

struct RoleName {
    PairRole::Kind kind;
    std::string_view name;
    bool indexed;
};

constexpr RoleName kRoleNames[] = {
    {PairRole::Kind::start, "start", false},          {PairRole::Kind::end, "end", false},
    {PairRole::Kind::copy_a, "copy-a", false},        {PairRole::Kind::copy_b, "copy-b", false},
    {PairRole::Kind::copy_c, "copy-c", false},        {PairRole::Kind::rule_whole, "rule", true},
    {PairRole::Kind::rule_alpha, "rule-alpha", true}, {PairRole::Kind::rule_beta, "rule-beta", true},
};

} // namespace

std::string format_role(const PairRole& role) {
    for (const auto& rn : kRoleNames) {
        if (rn.kind != role.kind) continue;
        std::string out(rn.name);
        if (rn.indexed) out += "(" + std::to_string(role.rule) + ")";
        return out;
    }
    return "?";
}

PairRole parse_role(std::string_view text) {
    std::string_view name = text;
    std::size_t rule = 0;
    const auto open = text.find('(');
    if (open != std::string_view::npos) {
        if (!text.ends_with(')')) throw InputError("bad role '" + std::string(text) + "'");
        name = text.substr(0, open);
        const auto digits = text.substr(open + 1, text.size() - open - 2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rule);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || rule == 0) {
            throw InputError("bad role '" + std::string(text) + "'");
        }
    }
    for (const auto& rn : kRoleNames) {
        if (rn.name == name && rn.indexed == (open != std::string_view::npos)) return {rn.kind, rule};
    }
    throw InputError("bad role '" + std::string(text) + "'");
}

std::size_t ReductionArtifact::index_of(const PairRole& r) const {
    for (std::size_t i = 0; i < roles.size(); ++i) {
        if (roles[i] == r) return i + 1;
    }
    throw InputError("artifact has no pair with role " + format_role(r));
}

namespace {

void require_reducible(const NormalSystem& sys, const Word& target) {
    if (sys.tier() != AlphabetTier::base) {
        throw InputError("reductions need a source system over {a,b}; c, d and f must stay fresh");
    }
    if (target.empty()) throw InputError("target word must be nonempty");
    if (!sys.admits(target)) throw InputError("target word " + target.str() + " is not over {a,b}");
}

} // namespace

NormalSystem build_s1(const NormalSystem& sys) {
    if (sys.tier() != AlphabetTier::base) throw InputError("build_s1 needs a source system over {a,b}");
    const Word c{Letter::c};
    std::vector<NormalRule> rules;
    rules.reserve(sys.rule_count() + 3);
    for (const auto& r : sys.rules()) rules.push_back({reverse(r.alpha) + c, c + reverse(r.beta)});
    for (Letter y : {Letter::a, Letter::b, Letter::c}) rules.push_back({Word{y}, Word{y}});
    return NormalSystem(reverse(sys.initial()) + c, std::move(rules), AlphabetTier::extended);
}

ReductionArtifact reduce_post(const NormalSystem& sys, const Word& target) {
    require_reducible(sys, target);
    const Word c{Letter::c};
    const Word d{Letter::d};
    const Word dd = d + d;
    using K = PairRole::Kind;

    std::vector<WordPair> pairs{
        {d + ell_d(reverse(sys.initial()) + c), dd},
        {dd, r_d(reverse(target) + c) + d},
    };
    std::vector<PairRole> roles{{K::start}, {K::end}};
    const K copies[] = {K::copy_a, K::copy_b, K::copy_c};
    const Letter copy_letters[] = {Letter::a, Letter::b, Letter::c};
    for (int k = 0; k < 3; ++k) {
        const Word y{copy_letters[k]};
        pairs.push_back({ell_d(y), r_d(y)});
        roles.push_back({copies[k]});
    }
    // P1 rule gamma X -> X delta becomes (ell_d(delta), r_d(gamma)).
    for (std::size_t j = 1; j <= sys.rule_count(); ++j) {
        const auto& r = sys.rule(j);
        pairs.push_back({ell_d(c + reverse(r.beta)), r_d(reverse(r.alpha) + c)});
        roles.push_back({K::rule_whole, j});
    }
    return {sys, target, ReductionMethod::post, PcpInstance(std::move(pairs)), std::move(roles)};
}

ReductionArtifact reduce_new(const NormalSystem& sys, const Word& target) {
    require_reducible(sys, target);
    const Word d{Letter::d};
    const Word f{Letter::f};
    const Word dd = d + d;
    using K = PairRole::Kind;

    std::vector<WordPair> pairs{
        {d + ell_d(f + sys.initial()), dd},
        {dd, r_d(f + target) + d},
        {ell_d(Word{Letter::a}), r_d(Word{Letter::a})},
        {ell_d(Word{Letter::b}), r_d(Word{Letter::b})},
    };
    std::vector<PairRole> roles{{K::start}, {K::end}, {K::copy_a}, {K::copy_b}};
    for (std::size_t j = 1; j <= sys.rule_count(); ++j) {
        const auto& r = sys.rule(j);
        const Word marker = Word::power(Letter::c, j);
        pairs.push_back({ell_d(marker + f), r_d(f + r.alpha)});
        roles.push_back({K::rule_alpha, j});
        pairs.push_back({ell_d(r.beta), r_d(marker)});
        roles.push_back({K::rule_beta, j});
    }
    return {sys, target, ReductionMethod::fresh, PcpInstance(std::move(pairs)), std::move(roles)};
}

ReductionArtifact reduce(const NormalSystem& sys, const Word& target, ReductionMethod method) {
    return method == ReductionMethod::post ? reduce_post(sys, target) : reduce_new(sys, target);
}

SizeReport size_report(const NormalSystem& sys) {
    const std::size_t t = sys.rule_count();
    return {t + 5, 2 * t + 4};
}

} // namespace postpcp
