#include <doctest.h>

#include "postpcp/family.hpp"
#include "postpcp/text_format.hpp"

using namespace postpcp;

TEST_CASE("normal system files") {
    const auto sys = parse_normal_system("# comment\n\ninitial: aa\nrule: a -> b\n");
    CHECK(sys.initial() == Word("aa"));
    CHECK(sys.rules() == std::vector<NormalRule>{{Word("a"), Word("b")}});
    CHECK(sys.tier() == AlphabetTier::base);
    CHECK(format_normal_system(sys) == "initial: aa\nrule: a -> b\n");

    CHECK(parse_normal_system("initial: aac\nrule: ac -> cb\n").tier() == AlphabetTier::extended);

    auto line_of = [](std::string_view text) {
        try {
            parse_normal_system(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("initial: aa\nrule: a b\n") == 2);
    CHECK(line_of("initial: aa\nrule: a -> bx\n") == 2);
    CHECK(line_of("initial: aa\ninitial: b\nrule: a -> b\n") == 2);
    CHECK(line_of("initial: aa\nwhat: a\n") == 2);
    CHECK(line_of("rule: a -> b\n") == 1);
    CHECK(line_of("initial: ad\nrule: a -> b\n") == 2);
    CHECK(line_of("initial: aa\nrule: () -> b\n") == 2);
}

TEST_CASE("instance files") {
    const auto inst = parse_instance("pair: ab , a\n# x\npair: () , bb\n");
    CHECK(inst.pairs() == std::vector<WordPair>{{Word("ab"), Word("a")}, {Word{}, Word("bb")}});
    CHECK(format_instance(inst) == "pair: ab , a\npair: () , bb\n");
    CHECK_THROWS_AS(parse_instance("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("pair: a b\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("pair: a , b , c\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("pair: a , \n"), ParseError);
}

TEST_CASE("artifact files are re-readable") {
    for (const auto& sys : system_family(13, 60)) {
        for (auto method : {ReductionMethod::fresh, ReductionMethod::post}) {
            const auto art = reduce(sys, Word("ab"), method);
            const auto text = format_artifact(art, "systems/x.ns");
            const auto back = parse_artifact(text);
            CHECK(back.source == art.source);
            CHECK(back.target == art.target);
            CHECK(back.method == art.method);
            CHECK(back.instance == art.instance);
            CHECK(back.roles == art.roles);
            CHECK(format_artifact(back, "systems/x.ns") == text);
            CHECK(parse_instance(text) == art.instance);
        }
    }
}

TEST_CASE("tampered artifacts are rejected") {
    const auto art = reduce_new(NormalSystem(Word("aa"), {{Word("a"), Word("b")}}), Word("bb"));
    const auto text = format_artifact(art, "aa.ns");
    auto replace = [&](std::string_view from, std::string_view to) {
        std::string t = text;
        t.replace(t.find(from), from.size(), to);
        return t;
    };
    CHECK_THROWS_AS(parse_artifact(replace("# role 5: rule-alpha(1)", "# role 5: rule-beta(1)")), ParseError);
    CHECK_THROWS_AS(parse_artifact(replace("# role 6: rule-beta(1)\n", "")), ParseError);
    CHECK_THROWS_AS(parse_artifact(replace("pair: db , cd", "pair: db , ccd")), ParseError);
    CHECK_THROWS_AS(parse_artifact(replace("# method: new", "# method: post")), ParseError);
    CHECK_THROWS_AS(parse_artifact(replace("# target: bb\n", "")), ParseError);
    CHECK_THROWS_AS(parse_artifact(replace("# role 6:", "# role 9:")), ParseError);
}
