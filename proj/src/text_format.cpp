#include "postpcp/text_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace postpcp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct Line {
    std::size_t number;
    std::string_view text;  // trimmed
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        out.push_back({++number, trim(text.substr(0, nl))});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

// "key: value" -> value, or nullopt if the line has a different key.
std::optional<std::string_view> field(std::string_view line, std::string_view key) {
    if (!line.starts_with(key)) return std::nullopt;
    line.remove_prefix(key.size());
    if (line.empty() || line.front() != ':') return std::nullopt;
    return trim(line.substr(1));
}

Word word_at(const Line& line, std::string_view text) {
    try {
        return parse_word(trim(text));
    } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
    }
}

NormalRule rule_at(const Line& line, std::string_view body) {
    const auto arrow = body.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line.number, "expected 'rule: <alpha> -> <beta>'");
    return {word_at(line, body.substr(0, arrow)), word_at(line, body.substr(arrow + 2))};
}

WordPair pair_at(const Line& line, std::string_view body) {
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError(line.number, "expected 'pair: <u> , <v>'");
    }
    return {word_at(line, body.substr(0, comma)), word_at(line, body.substr(comma + 1))};
}

bool any_c(const Word& initial, const std::vector<NormalRule>& rules) {
    if (initial.contains(Letter::c)) return true;
    for (const auto& r : rules) {
        if (r.alpha.contains(Letter::c) || r.beta.contains(Letter::c)) return true;
    }
    return false;
}

NormalSystem make_system(std::size_t line, std::optional<Word> initial, std::vector<NormalRule> rules) {
    if (!initial) throw ParseError(line, "missing 'initial:' line");
    if (rules.empty()) throw ParseError(line, "missing 'rule:' line");
    const auto tier = any_c(*initial, rules) ? AlphabetTier::extended : AlphabetTier::base;
    try {
        return NormalSystem(std::move(*initial), std::move(rules), tier);
    } catch (const InputError& e) {
        throw ParseError(line, e.what());
    }
}

std::string format_rule(const NormalRule& r) { return serialize_word(r.alpha) + " -> " + serialize_word(r.beta); }

std::string format_pairs(const PcpInstance& inst) {
    std::string out;
    for (const auto& p : inst.pairs()) out += "pair: " + serialize_word(p.top) + " , " + serialize_word(p.bottom) + "\n";
    return out;
}

} // namespace

NormalSystem parse_normal_system(std::string_view text) {
    std::optional<Word> initial;
    std::vector<NormalRule> rules;
    std::size_t last = 0;
    for (const auto& line : split_lines(text)) {
        last = line.number;
        if (line.text.empty() || line.text.front() == '#') continue;
        if (auto v = field(line.text, "initial")) {
            if (initial) throw ParseError(line.number, "duplicate 'initial:' line");
            initial = word_at(line, *v);
        } else if (auto r = field(line.text, "rule")) {
            rules.push_back(rule_at(line, *r));
        } else {
            throw ParseError(line.number, "expected 'initial: <word>' or 'rule: <alpha> -> <beta>'");
        }
    }
    return make_system(last, std::move(initial), std::move(rules));
}

std::string format_normal_system(const NormalSystem& sys) {
    std::string out = "initial: " + serialize_word(sys.initial()) + "\n";
    for (const auto& r : sys.rules()) out += "rule: " + format_rule(r) + "\n";
    return out;
}

PcpInstance parse_instance(std::string_view text) {
    std::vector<WordPair> pairs;
    std::size_t last = 0;
    for (const auto& line : split_lines(text)) {
        last = line.number;
        if (line.text.empty() || line.text.front() == '#') continue;
        auto body = field(line.text, "pair");
        if (!body) throw ParseError(line.number, "expected 'pair: <u> , <v>'");
        pairs.push_back(pair_at(line, *body));
    }
    if (pairs.empty()) throw ParseError(last, "instance has no 'pair:' lines");
    return PcpInstance(std::move(pairs));
}

std::string format_instance(const PcpInstance& inst) { return format_pairs(inst); }

ReductionArtifact parse_artifact(std::string_view text) {
    std::optional<ReductionMethod> method;
    std::optional<Word> initial;
    std::optional<Word> target;
    std::vector<NormalRule> rules;
    std::vector<std::optional<PairRole>> roles;
    std::vector<std::pair<std::size_t, PairRole>> role_lines;
    std::size_t last = 0;

    for (const auto& line : split_lines(text)) {
        last = line.number;
        if (line.text.empty()) continue;
        if (line.text.front() == '#') {
            const auto meta = trim(line.text.substr(1));
            try {
                if (auto v = field(meta, "method")) {
                    method = parse_method(*v);
                } else if (auto w = field(meta, "source-initial")) {
                    initial = word_at(line, *w);
                } else if (auto r = field(meta, "source-rule")) {
                    rules.push_back(rule_at(line, *r));
                } else if (auto u = field(meta, "target")) {
                    target = word_at(line, *u);
                } else if (meta.starts_with("role ")) {
                    const auto colon = meta.find(':');
                    if (colon == std::string_view::npos) throw ParseError(line.number, "expected '# role <index>: <role>'");
                    const auto idx = parse_indices(trim(meta.substr(5, colon - 5)));
                    if (idx.size() != 1 || idx[0] == 0) throw ParseError(line.number, "bad role index");
                    role_lines.emplace_back(idx[0], parse_role(trim(meta.substr(colon + 1))));
                }
            } catch (const ParseError&) {
                throw;
            } catch (const InputError& e) {
                throw ParseError(line.number, e.what());
            }
            continue;
        }
        auto body = field(line.text, "pair");
        if (!body) throw ParseError(line.number, "expected 'pair: <u> , <v>'");
        (void)pair_at(line, *body);
    }

    if (!method) throw ParseError(last, "artifact is missing '# method:'");
    if (!target) throw ParseError(last, "artifact is missing '# target:'");
    NormalSystem source = make_system(last, std::move(initial), std::move(rules));
    PcpInstance instance = parse_instance(text);

    roles.assign(instance.size(), std::nullopt);
    for (const auto& [index, role] : role_lines) {
        if (index > instance.size() || roles[index - 1]) {
            throw ParseError(last, "role line for pair " + std::to_string(index) + " is out of range or repeated");
        }
        roles[index - 1] = role;
    }
    ReductionArtifact rebuilt = [&] {
        try {
            return reduce(source, *target, *method);
        } catch (const InputError& e) {
            throw ParseError(last, e.what());
        }
    }();
    for (std::size_t i = 0; i < roles.size(); ++i) {
        if (!roles[i]) throw ParseError(last, "missing role for pair " + std::to_string(i + 1));
        if (*roles[i] != rebuilt.roles[i]) {
            throw ParseError(last, "role of pair " + std::to_string(i + 1) + " does not match the construction");
        }
    }
    if (!(instance == rebuilt.instance)) throw ParseError(last, "pairs do not match the recorded construction");
    return rebuilt;
}

std::string format_artifact(const ReductionArtifact& art, std::string_view source_ref) {
    std::ostringstream out;
    out << "# method: " << method_name(art.method) << "\n";
    out << "# source: " << source_ref << "\n";
    out << "# source-initial: " << serialize_word(art.source.initial()) << "\n";
    for (const auto& r : art.source.rules()) out << "# source-rule: " << format_rule(r) << "\n";
    out << "# target: " << serialize_word(art.target) << "\n";
    for (std::size_t i = 0; i < art.roles.size(); ++i) out << "# role " << i + 1 << ": " << format_role(art.roles[i]) << "\n";
    out << format_pairs(art.instance);
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << contents;
}

} // namespace postpcp
