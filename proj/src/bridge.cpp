#include "postpcp/bridge.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

namespace postpcp {

namespace {

using K = PairRole::Kind;

void require_solution(const ReductionArtifact& art, const PcpSolution& sol) {
    if (!verify_solution(art.instance, sol.indices)) {
        throw InputError("index sequence " + format_indices(sol.indices) + " is not a solution of the instance");
    }
}

MalformedSolution malformed(std::size_t offset, const std::string& why) { return {offset + 1, why}; }

Word strip_d(const Word& w) {
    std::string out;
    for (char ch : w.str()) {
        if (ch != 'd') out += ch;
    }
    return Word(out);
}

} // namespace

Checked<SolutionParse> parse_solution(const ReductionArtifact& art, const PcpSolution& sol) {
    if (art.method != ReductionMethod::fresh) throw UnsupportedError("parse_solution needs a split-rule artifact");
    require_solution(art, sol);

    SolutionParse parse;
    Word top;
    for (std::size_t i : sol.indices) {
        parse.segments.emplace_back(i, art.role(i));
        top += art.instance.pair(i).top;
    }
    parse.recovered = strip_d(top);

    const auto& seg = parse.segments;
    if (seg.front().second.kind != K::start) return malformed(0, "solution does not open with the start pair");
    std::size_t k = 1;
    while (k < seg.size()) {
        const PairRole& r = seg[k].second;
        if (r.kind == K::end) {
            if (k + 1 != seg.size()) return malformed(k, "end pair before the last position");
            return parse;
        }
        if (r.kind != K::rule_alpha) {
            return malformed(k, "expected rule-alpha or end, found " + format_role(r));
        }
        const std::size_t opened = k++;
        while (k < seg.size() && (seg[k].second.kind == K::copy_a || seg[k].second.kind == K::copy_b)) ++k;
        if (k == seg.size()) return malformed(opened, format_role(r) + " is never closed");
        const PairRole& close = seg[k].second;
        if (close != PairRole{K::rule_beta, r.rule}) {
            return malformed(k, format_role(r) + " closed by " + format_role(close));
        }
        ++k;
    }
    return malformed(seg.size() - 1, "solution does not close with the end pair");
}

PcpSolution embed_derivation(const ReductionArtifact& art, const Derivation& d) {
    if (art.method != ReductionMethod::fresh) {
        throw UnsupportedError("embedding derivations is only defined for the split-rule construction");
    }
    if (d.start != art.source.initial() || !check_derivation(art.source, d, art.target)) {
        throw InputError("derivation does not lead from the initial word to " + art.target.str());
    }
    if (d.steps.empty()) throw InputError("derivation must take at least one step");

    PcpSolution sol{{art.index_of({K::start})}};
    const std::size_t copy_a = art.index_of({K::copy_a});
    const std::size_t copy_b = art.index_of({K::copy_b});
    for (const auto& step : d.steps) {
        sol.indices.push_back(art.index_of({K::rule_alpha, step.rule}));
        for (char ch : step.remainder.str()) sol.indices.push_back(ch == 'a' ? copy_a : copy_b);
        sol.indices.push_back(art.index_of({K::rule_beta, step.rule}));
    }
    sol.indices.push_back(art.index_of({K::end}));
    return sol;
}

Checked<Derivation> extract_derivation(const ReductionArtifact& art, const PcpSolution& sol) {
    auto parsed = parse_solution(art, sol);
    if (auto* bad = std::get_if<MalformedSolution>(&parsed)) return *bad;
    const auto& seg = std::get<SolutionParse>(parsed).segments;

    Derivation d{art.source.initial(), {}};
    for (std::size_t k = 1; k + 1 < seg.size();) {
        DerivationStep step{seg[k].second.rule, {}};
        for (++k; seg[k].second.kind != K::rule_beta; ++k) {
            step.remainder += seg[k].second.kind == K::copy_a ? Letter::a : Letter::b;
        }
        ++k;
        d.steps.push_back(std::move(step));
    }
    if (!check_derivation(art.source, d, art.target)) {
        return MalformedSolution{1, "blocks have the canonical shape but do not replay as a derivation: " +
                                        format_derivation(d)};
    }
    return d;
}

PcpSolution embed_s1_indices(const ReductionArtifact& art, const std::vector<std::size_t>& s1_indices) {
    if (art.method != ReductionMethod::post) throw UnsupportedError("embed_s1_indices needs a Post artifact");
    const std::size_t t = art.source.rule_count();
    PcpSolution sol{{art.index_of({K::start})}};
    for (std::size_t r : s1_indices) {
        if (r < 1 || r > t + 3) throw InputError("S1 rule index " + std::to_string(r) + " out of range");
        if (r <= t) {
            sol.indices.push_back(art.index_of({K::rule_whole, r}));
        } else {
            const K copies[] = {K::copy_a, K::copy_b, K::copy_c};
            sol.indices.push_back(art.index_of({copies[r - t - 1]}));
        }
    }
    sol.indices.push_back(art.index_of({K::end}));
    return sol;
}

Checked<bool> verify_post_reduction(const ReductionArtifact& art, const PcpSolution& sol) {
    if (art.method != ReductionMethod::post) throw UnsupportedError("verify_post_reduction needs a Post artifact");
    require_solution(art, sol);

    const std::size_t t = art.source.rule_count();
    const auto& idx = sol.indices;
    if (art.role(idx.front()).kind != K::start) return malformed(0, "solution does not open with the start pair");
    if (idx.size() < 2 || art.role(idx.back()).kind != K::end) {
        return malformed(idx.size() - 1, "solution does not close with the end pair");
    }
    std::vector<std::size_t> s1_rules;
    for (std::size_t k = 1; k + 1 < idx.size(); ++k) {
        const PairRole& r = art.role(idx[k]);
        switch (r.kind) {
        case K::rule_whole: s1_rules.push_back(r.rule); break;
        case K::copy_a: s1_rules.push_back(t + 1); break;
        case K::copy_b: s1_rules.push_back(t + 2); break;
        case K::copy_c: s1_rules.push_back(t + 3); break;
        default: return malformed(k, format_role(r) + " inside the rule block");
        }
    }
    const NormalSystem s1 = build_s1(art.source);
    const Word goal = reverse(art.target) + Word{Letter::c};
    if (s1_rules.empty()) return s1.initial() == goal;
    return check_post_conditions(s1, goal, s1_rules);
}

PcpBounds forward_bounds(const NormalSystem& sys, const Derivation& d) {
    std::size_t depth = 2;
    std::size_t overhang = 1 + sys.initial().size();
    for (const auto& s : d.steps) {
        depth += 2 + s.remainder.size();
        overhang += s.rule + 1 + s.remainder.size() + sys.rule(s.rule).beta.size();
    }
    return {depth, 2 * overhang + 3};
}

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::both_found: return "BothFound";
    case Verdict::both_absent: return "BothAbsentWithinBounds";
    case Verdict::mismatch: return "Mismatch";
    }
    return "?";
}

std::string format_derivation(const Derivation& d) {
    std::string out = serialize_word(d.start) + ":";
    if (d.steps.empty()) return out + "()";
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(d.steps[k].rule) + "/" + serialize_word(d.steps[k].remainder);
    }
    return out;
}

ExperimentReport equivalence_experiment(const NormalSystem& sys, const Word& target, const SearchBounds& search,
                                        const PcpBounds& pcp) {
    ExperimentReport rep;
    rep.zero_step = target == sys.initial();
    rep.derivation = derive_bounded(sys, target, search.max_steps, search.max_word_len);

    PcpBounds bounds = pcp;
    if (rep.derivation) {
        const PcpBounds needed = forward_bounds(sys, *rep.derivation);
        bounds.max_indices = std::max(bounds.max_indices, needed.max_indices);
        bounds.max_overhang = std::max(bounds.max_overhang, needed.max_overhang);
    }
    const ReductionArtifact art = reduce_new(sys, target);
    rep.solution = solve_bounded(art.instance, bounds.max_indices, bounds.max_overhang);

    std::string derive_text = rep.derivation ? format_derivation(*rep.derivation) : std::string("absent");
    std::string solve_text = rep.solution ? format_indices(rep.solution->indices) : std::string("absent");
    const std::string witnesses = "derivation=" + derive_text + " solution=" + solve_text;

    if (rep.solution) {
        auto extracted = extract_derivation(art, *rep.solution);
        if (auto* bad = std::get_if<MalformedSolution>(&extracted)) {
            rep.verdict = Verdict::mismatch;
            rep.details = witnesses + " malformed@" + std::to_string(bad->position) + ": " + bad->reason;
        } else {
            rep.extracted = std::get<Derivation>(std::move(extracted));
            rep.verdict = Verdict::both_found;
            rep.details = witnesses;
            if (!rep.derivation) rep.details += " (derivation recovered from solution, beyond search bounds)";
        }
    } else if (rep.derivation) {
        const PcpSolution embedded = embed_derivation(art, *rep.derivation);
        rep.verdict = Verdict::mismatch;
        rep.details = witnesses + " embedded=" + format_indices(embedded.indices) +
                      " embedded_valid=" + (verify_solution(art.instance, embedded.indices) ? "true" : "false");
    } else {
        rep.verdict = Verdict::both_absent;
        rep.details = witnesses;
    }
    if (rep.zero_step) rep.details += " [k=0 outside reduction scope]";
    return rep;
}

std::string format_report_line(std::string_view id, const ExperimentReport& report) {
    std::string out = "case ";
    out += id;
    out += ": ";
    out += verdict_name(report.verdict);
    if (!report.details.empty()) out += " " + report.details;
    return out;
}

std::vector<ExperimentReport> run_experiments(const std::vector<ExperimentCase>& cases, const SearchBounds& search,
                                              const PcpBounds& pcp) {
    std::vector<ExperimentReport> out(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < n; ++k) {
        try {
            out[k] = equivalence_experiment(cases[k].system, cases[k].target, search, pcp);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

namespace serial {

std::vector<ExperimentReport> run_experiments(const std::vector<ExperimentCase>& cases, const SearchBounds& search,
                                              const PcpBounds& pcp) {
    std::vector<ExperimentReport> out;
    out.reserve(cases.size());
    for (const auto& c : cases) out.push_back(equivalence_experiment(c.system, c.target, search, pcp));
    return out;
}

} // namespace serial

} // namespace postpcp
