#include <doctest.h>

#include <algorithm>
#include <regex>

#include "postpcp/family.hpp"
#include "postpcp/reductions.hpp"

using namespace postpcp;
using K = PairRole::Kind;

namespace {

NormalSystem aa_system() { return NormalSystem(Word("aa"), {{Word("a"), Word("b")}}); }

// ell_d / r_d images, optionally with one extra d at either end.
const std::regex kLeftShape("^d?(d[abcf])*d?$");
const std::regex kRightShape("^d?([abcf]d)*d?$");

} // namespace

TEST_CASE("roles format and parse") {
    for (const PairRole r : {PairRole{K::start}, PairRole{K::end}, PairRole{K::copy_a}, PairRole{K::copy_b},
                             PairRole{K::copy_c}, PairRole{K::rule_whole, 3}, PairRole{K::rule_alpha, 1},
                             PairRole{K::rule_beta, 12}}) {
        CHECK(parse_role(format_role(r)) == r);
    }
    CHECK(format_role({K::rule_alpha, 2}) == "rule-alpha(2)");
    CHECK_THROWS_AS(parse_role("rule-alpha"), InputError);
    CHECK_THROWS_AS(parse_role("start(1)"), InputError);
    CHECK_THROWS_AS(parse_role("rule(0)"), InputError);
    CHECK_THROWS_AS(parse_method("old"), InputError);
}

TEST_CASE("build_s1") {
    const auto s1 = build_s1(aa_system());
    CHECK(s1.initial() == Word("aac"));
    CHECK(s1.tier() == AlphabetTier::extended);
    CHECK(s1.rules() == std::vector<NormalRule>{{Word("ac"), Word("cb")},
                                                {Word("a"), Word("a")},
                                                {Word("b"), Word("b")},
                                                {Word("c"), Word("c")}});
    const NormalSystem two(Word("ab"), {{Word("a"), Word("bb")}, {Word("b"), Word("a")}});
    CHECK(build_s1(two).rule_count() == 5);
    const auto single = build_s1(NormalSystem(Word("b"), {{Word("b"), Word("a")}}));
    CHECK(single.initial() == Word("bc"));
    CHECK(single.rule(1) == NormalRule{Word("bc"), Word("ca")});
}

TEST_CASE("reduce_post on the worked example") {
    const auto art = reduce_post(aa_system(), Word("bb"));
    CHECK(art.method == ReductionMethod::post);
    REQUIRE(art.instance.size() == 6);
    CHECK(art.instance.pairs() == std::vector<WordPair>{{Word("ddadadc"), Word("dd")},
                                                        {Word("dd"), Word("bdbdcdd")},
                                                        {Word("da"), Word("ad")},
                                                        {Word("db"), Word("bd")},
                                                        {Word("dc"), Word("cd")},
                                                        {Word("dcdb"), Word("adcd")}});
    CHECK(art.roles == std::vector<PairRole>{{K::start}, {K::end}, {K::copy_a}, {K::copy_b}, {K::copy_c},
                                             {K::rule_whole, 1}});
    const auto sol = solve_bounded(art.instance, 40, 30);
    REQUIRE(sol);
    CHECK(verify_solution(art.instance, sol->indices));
}

TEST_CASE("reduce_new on the worked example") {
    const auto art = reduce_new(aa_system(), Word("bb"));
    CHECK(art.method == ReductionMethod::fresh);
    REQUIRE(art.instance.size() == 6);
    CHECK(art.instance.pairs() == std::vector<WordPair>{{Word("ddfdada"), Word("dd")},
                                                        {Word("dd"), Word("fdbdbdd")},
                                                        {Word("da"), Word("ad")},
                                                        {Word("db"), Word("bd")},
                                                        {Word("dcdf"), Word("fdad")},
                                                        {Word("db"), Word("cd")}});
    CHECK(art.roles == std::vector<PairRole>{{K::start}, {K::end}, {K::copy_a}, {K::copy_b}, {K::rule_alpha, 1},
                                             {K::rule_beta, 1}});
    CHECK(solve_bounded(art.instance, 12, 24) == PcpSolution{{1, 5, 3, 6, 5, 4, 6, 2}});
}

TEST_CASE("reduction input errors") {
    CHECK_THROWS_AS(reduce_new(aa_system(), Word{}), InputError);
    CHECK_THROWS_AS(reduce_post(aa_system(), Word{}), InputError);
    CHECK_THROWS_AS(reduce_new(aa_system(), Word("bc")), InputError);
    const NormalSystem extended(Word("ac"), {{Word("a"), Word("b")}}, AlphabetTier::extended);
    CHECK_THROWS_AS(reduce_new(extended, Word("b")), InputError);
    CHECK_THROWS_AS(reduce_post(extended, Word("b")), InputError);
    CHECK_THROWS_AS(build_s1(extended), InputError);
}

TEST_CASE("size_report") {
    auto with_rules = [](std::size_t t) {
        return NormalSystem(Word("a"), std::vector<NormalRule>(t, {Word("a"), Word("b")}));
    };
    CHECK(size_report(with_rules(1)).post_size == 6);
    CHECK(size_report(with_rules(1)).new_size == 6);
    CHECK(size_report(with_rules(2)).post_size == 7);
    CHECK(size_report(with_rules(2)).new_size == 8);
    CHECK(size_report(with_rules(5)).post_size == 10);
    CHECK(size_report(with_rules(5)).new_size == 14);
}

TEST_CASE("structural invariants over a generated family") {
    std::mt19937_64 rng(31);
    static constexpr Letter ab[] = {Letter::a, Letter::b};
    for (const auto& sys : system_family(8, 200, {.max_rules = 5, .max_side = 3, .max_initial = 4})) {
        const Word u = random_word(rng, ab, 1, 4);
        const std::size_t t = sys.rule_count();
        for (auto method : {ReductionMethod::post, ReductionMethod::fresh}) {
            const auto art = reduce(sys, u, method);
            const auto again = reduce(sys, u, method);
            CHECK(art.instance == again.instance);
            CHECK(art.roles == again.roles);
            CHECK(art.roles.size() == art.instance.size());
            CHECK(art.instance.size() == (method == ReductionMethod::post ? t + 5 : 2 * t + 4));
            for (std::size_t i = 1; i <= art.instance.size(); ++i) {
                CHECK(art.index_of(art.role(i)) == i);
                const auto& p = art.instance.pair(i);
                CHECK(std::regex_match(p.top.str(), kLeftShape));
                CHECK(std::regex_match(p.bottom.str(), kRightShape));
                if (method == ReductionMethod::post) {
                    CHECK_FALSE(p.top.contains(Letter::f));
                    CHECK_FALSE(p.bottom.contains(Letter::f));
                }
                const auto& role = art.role(i);
                if (role.kind == K::rule_alpha) {
                    CHECK(p.top.view().find("dcdf") == 2 * role.rule - 2);
                    CHECK(std::count(p.top.view().begin(), p.top.view().end(), 'c') == static_cast<long>(role.rule));
                }
                if (role.kind == K::rule_beta) {
                    CHECK(p.bottom == r_d(Word::power(Letter::c, role.rule)));
                }
            }
        }
    }
}
