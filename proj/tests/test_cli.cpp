#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "postpcp/cli.hpp"
#include "postpcp/text_format.hpp"

namespace {

const std::string kFixtures = POSTPCP_FIXTURES;

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "postpcp");
    std::ostringstream out, err;
    const int status = postpcp::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string fixture(const char* name) { return kFixtures + "/" + name; }

} // namespace

TEST_CASE("sizes") {
    auto r = run({"sizes", "--system", fixture("two_rules.ns")});
    CHECK(r.status == 0);
    CHECK(r.out == "post=7 new=8\n");
    CHECK(run({"sizes", "--system", fixture("aa.ns")}).out == "post=6 new=6\n");
}

TEST_CASE("derive") {
    auto found = run({"derive", "--system", fixture("aa.ns"), "--target", "bb"});
    CHECK(found.status == 0);
    CHECK(found.out == "derivation: 2 steps\naa -> ab  rule 1 x=a\nab -> bb  rule 1 x=b\n");

    auto absent = run({"derive", "--system", fixture("aa.ns"), "--target", "ba"});
    CHECK(absent.status == 1);
    CHECK(absent.out == "absent within bounds\n");

    CHECK(run({"derive", "--system", fixture("aa.ns"), "--target", "bb", "--max-steps", "1"}).status == 1);
    CHECK(run({"derive", "--system", fixture("a_to_b.ns"), "--target", "b"}).out ==
          "derivation: 1 steps\na -> b  rule 1 x=()\n");
}

TEST_CASE("verify and solve") {
    const auto inst = fixture("aa_bb_new.pcp");
    auto ok = run({"verify", "--instance", inst, "--solution", "1,5,3,6,5,4,6,2"});
    CHECK(ok.status == 0);
    CHECK(ok.out == "true\n");
    auto no = run({"verify", "--instance", inst, "--solution", "1,5,2"});
    CHECK(no.status == 1);
    CHECK(no.out == "false\n");
    CHECK(run({"verify", "--instance", inst, "--solution", "1,9"}).status == 2);

    auto solved = run({"solve", "--instance", inst, "--max-indices", "12", "--max-overhang", "24"});
    CHECK(solved.status == 0);
    CHECK(solved.out == "1,5,3,6,5,4,6,2\n");
    auto tight = run({"solve", "--instance", inst, "--max-indices", "7"});
    CHECK(tight.status == 1);
    CHECK(tight.out == "absent within bounds\n");
}

TEST_CASE("reduce writes a re-readable artifact") {
    const auto dir = std::filesystem::temp_directory_path() / "postpcp_cli_test";
    std::filesystem::create_directories(dir);
    for (const char* method : {"new", "post"}) {
        const auto out = (dir / (std::string(method) + ".pcp")).string();
        auto r = run({"reduce", "--system", fixture("two_rules.ns"), "--target", "ab", "--method", method, "--out", out});
        CHECK(r.status == 0);
        CHECK(r.out == (std::string(method) == "new" ? "size=8\n" : "size=7\n"));
        const auto art = postpcp::parse_artifact(postpcp::read_file(out));
        CHECK(art.instance.size() == (std::string(method) == "new" ? 8u : 7u));
        CHECK(run({"solve", "--instance", out}).status == 0);
    }
    // Same input, same bytes.
    const auto a = (dir / "a.pcp").string(), b = (dir / "b.pcp").string();
    run({"reduce", "--system", fixture("aa.ns"), "--target", "bb", "--out", a});
    run({"reduce", "--system", fixture("aa.ns"), "--target", "bb", "--out", b});
    CHECK(postpcp::read_file(a) == postpcp::read_file(b));
    std::filesystem::remove_all(dir);
}

TEST_CASE("roundtrip") {
    auto r = run({"roundtrip", "--system", fixture("aa.ns"), "--target", "bb"});
    CHECK(r.status == 0);
    CHECK(r.out == "case " + fixture("aa.ns") + ":bb: BothFound derivation=aa:1/a,1/b solution=1,5,3,6,5,4,6,2\n");
    auto absent = run({"roundtrip", "--system", fixture("aa.ns"), "--target", "ba", "--max-indices", "20",
                       "--max-overhang", "40"});
    CHECK(absent.status == 1);
    CHECK(absent.out.find("BothAbsentWithinBounds") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"sizes", "--system", fixture("aa.ns"), "--bogus"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"sizes"}).status == 2);
    CHECK(run({"sizes", "--system", fixture("missing.ns")}).status == 2);
    CHECK(run({"derive", "--system", fixture("aa.ns"), "--target", "axb"}).status == 2);
    CHECK(run({"reduce", "--system", fixture("aa.ns"), "--target", "b", "--method", "old", "--out", "/dev/null"}).status ==
          2);

    const auto bad = std::filesystem::temp_directory_path() / "postpcp_bad.ns";
    postpcp::write_file(bad, "initial: aa\nrule: a => b\n");
    auto r = run({"sizes", "--system", bad.string()});
    CHECK(r.status == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::filesystem::remove(bad);

    CHECK(run({"--help"}).status == 0);
}
