#include "postpcp/cli.hpp"

#include <CLI11.hpp>

#include "postpcp/bridge.hpp"
#include "postpcp/text_format.hpp"

namespace postpcp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Options {
    std::string system;
    std::string instance;
    std::string target;
    std::string method = "new";
    std::string out;
    std::string solution;
    std::size_t max_steps = 32;
    std::size_t max_len = 64;
    std::size_t max_indices = 64;
    std::size_t max_overhang = 128;
};

NormalSystem load_system(const std::string& path) {
    try {
        return parse_normal_system(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

PcpInstance load_instance(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

int derive(const Options& o, std::ostream& out) {
    const NormalSystem sys = load_system(o.system);
    const auto d = derive_bounded(sys, parse_word(o.target), o.max_steps, o.max_len);
    if (!d) {
        out << "absent within bounds\n";
        return kNo;
    }
    out << "derivation: " << d->steps.size() << " steps\n";
    Word current = d->start;
    for (const auto& s : d->steps) {
        const Word next = s.remainder + sys.rule(s.rule).beta;
        out << serialize_word(current) << " -> " << serialize_word(next) << "  rule " << s.rule
            << " x=" << serialize_word(s.remainder) << "\n";
        current = next;
    }
    return kOk;
}

int reduce_cmd(const Options& o, std::ostream& out) {
    const NormalSystem sys = load_system(o.system);
    const ReductionArtifact art = reduce(sys, parse_word(o.target), parse_method(o.method));
    write_file(o.out, format_artifact(art, o.system));
    out << "size=" << art.instance.size() << "\n";
    return kOk;
}

int solve(const Options& o, std::ostream& out) {
    const auto sol = solve_bounded(load_instance(o.instance), o.max_indices, o.max_overhang);
    if (!sol) {
        out << "absent within bounds\n";
        return kNo;
    }
    out << format_indices(sol->indices) << "\n";
    return kOk;
}

int verify(const Options& o, std::ostream& out) {
    const bool ok = verify_solution(load_instance(o.instance), parse_indices(o.solution));
    out << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kNo;
}

int roundtrip(const Options& o, std::ostream& out) {
    const NormalSystem sys = load_system(o.system);
    const Word target = parse_word(o.target);
    const auto rep = equivalence_experiment(sys, target, {o.max_steps, o.max_len}, {o.max_indices, o.max_overhang});
    out << format_report_line(o.system + ":" + serialize_word(target), rep) << "\n";
    return rep.verdict == Verdict::both_found ? kOk : kNo;
}

int sizes(const Options& o, std::ostream& out) {
    const auto r = size_report(load_system(o.system));
    out << "post=" << r.post_size << " new=" << r.new_size << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Post normal systems and their reductions to the Post Correspondence Problem"};
    app.require_subcommand(1, 1);
    Options o;

    auto* derive_cmd = app.add_subcommand("derive", "bounded derivation search in a normal system");
    derive_cmd->add_option("--system", o.system, "normal system file")->required();
    derive_cmd->add_option("--target", o.target, "target word")->required();
    derive_cmd->add_option("--max-steps", o.max_steps, "rule applications")->capture_default_str();
    derive_cmd->add_option("--max-len", o.max_len, "longest intermediate word")->capture_default_str();

    auto* reduce_sub = app.add_subcommand("reduce", "build the PCP instance for (system, target)");
    reduce_sub->add_option("--system", o.system, "normal system file")->required();
    reduce_sub->add_option("--target", o.target, "target word")->required();
    reduce_sub->add_option("--method", o.method, "new | post")->check(CLI::IsMember({"new", "post"}))->capture_default_str();
    reduce_sub->add_option("--out", o.out, "artifact file to write")->required();

    auto* solve_cmd = app.add_subcommand("solve", "bounded PCP solution search");
    solve_cmd->add_option("--instance", o.instance, "instance or artifact file")->required();
    solve_cmd->add_option("--max-indices", o.max_indices, "longest index sequence")->capture_default_str();
    solve_cmd->add_option("--max-overhang", o.max_overhang, "longest unmatched suffix")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "check an index sequence against an instance");
    verify_cmd->add_option("--instance", o.instance, "instance or artifact file")->required();
    verify_cmd->add_option("--solution", o.solution, "comma-separated pair indices")->required();

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "derivation search vs PCP search on the new reduction");
    roundtrip_cmd->add_option("--system", o.system, "normal system file")->required();
    roundtrip_cmd->add_option("--target", o.target, "target word")->required();
    roundtrip_cmd->add_option("--max-steps", o.max_steps)->capture_default_str();
    roundtrip_cmd->add_option("--max-len", o.max_len)->capture_default_str();
    roundtrip_cmd->add_option("--max-indices", o.max_indices)->capture_default_str();
    roundtrip_cmd->add_option("--max-overhang", o.max_overhang)->capture_default_str();

    auto* sizes_cmd = app.add_subcommand("sizes", "instance sizes of both reductions");
    sizes_cmd->add_option("--system", o.system, "normal system file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*derive_cmd) return derive(o, out);
        if (*reduce_sub) return reduce_cmd(o, out);
        if (*solve_cmd) return solve(o, out);
        if (*verify_cmd) return verify(o, out);
        if (*roundtrip_cmd) return roundtrip(o, out);
        if (*sizes_cmd) return sizes(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace postpcp::cli
