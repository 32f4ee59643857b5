#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "setmatch/error.hpp"
#include "setmatch/io.hpp"
#include "setmatch/matching.hpp"
#include "setmatch/oracles.hpp"
#include "setmatch/theorem_lab.hpp"

namespace setmatch::cli {

using nlohmann::json;

namespace {

enum class Format { json, text };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Input errors carry the file name so the message names the offending token.
template <class F>
auto load(const std::string& path, F parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

Family load_family(const std::string& path) {
    return load(path, [](const std::string& t) { return parse_family(t); });
}

WeightFn load_weight_fn(const std::string& path) {
    return load(path, [](const std::string& t) { return parse_weight_fn(t); });
}

std::vector<int> elements(SetMask s) {
    std::vector<int> out;
    for (int i = 0; s >> i; ++i) {
        if ((s >> i) & 1U) out.push_back(i + 1);
    }
    return out;
}

struct Result {
    std::string body;
    int code = kOk;
};

Result family_out(const Family& f, Format fmt) {
    return {fmt == Format::json ? family_to_json(f) + "\n" : family_to_text(f)};
}

Result match_cmd(const std::string& f_path, const std::string& g_path, Format fmt) {
    const Family f = load_family(f_path);
    const Family g = load_family(g_path);
    const Injection phi = matched_into(f, g);
    if (fmt == Format::json) return {injection_to_json(phi) + "\n"};
    std::string out;
    for (const auto& [a, b] : phi.image) out += format_set(a) + " -> " + format_set(b) + "\n";
    return {out};
}

Result self_match_cmd(const std::string& path, Format fmt) {
    const Family a = load_family(path);
    const PairMatching m = self_matching(a);
    const bool odd = a.size() % 2 == 1;
    if (fmt == Format::json) {
        json j = json::parse(pair_matching_to_json(m));
        if (odd) j["leftover"] = json::array();
        return {j.dump() + "\n"};
    }
    std::string out;
    for (const auto& [x, y] : m.pairs) out += format_set(x) + " | " + format_set(y) + "\n";
    if (odd) out += "odd family: {} left unmatched\n";
    return {out};
}

Result weighted_match_cmd(const std::string& f_path, const std::string& g_path, Format fmt) {
    const WeightFn f = load_weight_fn(f_path);
    const WeightFn g = load_weight_fn(g_path);
    const WeightedMatching p = weighted_disjoint_matching(f, g);
    if (fmt == Format::json) return {weighted_matching_to_json(p) + "\n"};
    std::string out;
    for (const auto& [key, w] : p.entries()) {
        out += format_set(key.first) + " " + format_set(key.second) + " " + std::to_string(w) + "\n";
    }
    return {out};
}

Result verify_cmd(const std::string& matching_path, const std::vector<std::string>& inputs, Format fmt) {
    const std::string kind = load(matching_path, [](const std::string& t) { return matching_kind(t); });
    const std::size_t need = kind == "self" ? 1 : 2;
    if (inputs.size() != need) {
        throw Error("a '" + kind + "' matching needs " + std::to_string(need) + " input file(s), got " +
                    std::to_string(inputs.size()));
    }
    Verdict v;
    if (kind == "weighted") {
        const auto p = load(matching_path, [](const std::string& t) { return parse_weighted_matching(t); });
        v = verify_weighted_matching(p, load_weight_fn(inputs[0]), load_weight_fn(inputs[1]));
    } else if (kind == "self") {
        const auto m = load(matching_path, [](const std::string& t) { return parse_pair_matching(t); });
        v = verify_pair_matching(m, load_family(inputs[0]));
    } else if (kind == "injection") {
        const auto phi = load(matching_path, [](const std::string& t) { return parse_injection(t); });
        v = verify_injection(phi, load_family(inputs[0]), load_family(inputs[1]));
    } else {
        throw Error(matching_path + ": unknown matching kind '" + kind + "'");
    }
    const int code = v.ok ? kOk : kFailed;
    if (fmt == Format::json) {
        json j{{"schema", kSchemaVersion}, {"kind", kind}, {"ok", v.ok}};
        if (!v.ok) j["violation"] = v.violation;
        return {j.dump() + "\n", code};
    }
    return {v.ok ? "ok\n" : "violation: " + v.violation + "\n", code};
}

Result enumerate_cmd(int n, Format fmt) {
    const auto families = enumerate_down_sets(n);
    if (fmt == Format::json) {
        json list = json::array();
        for (const auto& f : families) {
            json sets = json::array();
            for (SetMask s : f) sets.push_back(elements(s));
            list.push_back(sets);
        }
        json j{{"schema", kSchemaVersion}, {"n", n}, {"count", families.size()}, {"down_sets", list}};
        return {j.dump() + "\n"};
    }
    std::string out = "count=" + std::to_string(families.size()) + "\n";
    for (const auto& f : families) out += format_family(f) + "\n";
    return {out};
}

Result m_table_cmd(int n, int t, int s, Format fmt) {
    const MTable table = m_table(n, t, s);
    return {fmt == Format::json ? m_table_to_json(table) + "\n" : m_table_to_tsv(table)};
}

Result check_cmd(const std::string& id, const CheckOptions& options, Format fmt) {
    const CheckReport r = run_check(id, options);
    return {fmt == Format::json ? report_to_json(r) + "\n" : report_to_text(r), r.passed() ? kOk : kFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Disjoint-set matchings for down-sets and small-case checks of intersecting-family bounds",
                 "setmatch"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    Format fmt = Format::json;
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--out", out_path, "Write results here instead of stdout");

    std::function<Result()> action;
    std::string path_a, path_b;
    std::vector<std::string> inputs;

    auto* match = app.add_subcommand("match", "Match down-set F into down-set G along disjoint pairs");
    match->add_option("F", path_a)->required();
    match->add_option("G", path_b)->required();
    match->callback([&] { action = [&] { return match_cmd(path_a, path_b, fmt); }; });

    auto* self = app.add_subcommand("self-match", "Pair up the members of a down-set");
    self->add_option("A", path_a)->required();
    self->callback([&] { action = [&] { return self_match_cmd(path_a, fmt); }; });

    auto* weighted = app.add_subcommand("weighted-match", "Weighted disjoint matching of f into g");
    weighted->add_option("f", path_a)->required();
    weighted->add_option("g", path_b)->required();
    weighted->callback([&] { action = [&] { return weighted_match_cmd(path_a, path_b, fmt); }; });

    auto* verify = app.add_subcommand("verify", "Re-check a matching file against its inputs");
    verify->add_option("matching", path_a)->required();
    verify->add_option("inputs", inputs)->required();
    verify->callback([&] { action = [&] { return verify_cmd(path_a, inputs, fmt); }; });

    int n = 3, t = 1, s = 1;
    auto* enumerate = app.add_subcommand("enumerate-downsets", "List every down-set of 2^[n]");
    enumerate->add_option("--n", n)->required()->check(CLI::Range(0, 5));
    enumerate->callback([&] { action = [&] { return enumerate_cmd(n, fmt); }; });

    auto* table = app.add_subcommand("m-table", "Tabulate m(n,t) and m(n,t,s) up to the given sizes");
    table->add_option("--n", n)->required()->check(CLI::Range(1, kMaxTableGround));
    table->add_option("--t", t)->check(CLI::Range(1, kMaxTableGround));
    table->add_option("--s", s)->check(CLI::Range(1, kMaxTableGround));
    table->callback([&] { action = [&] { return m_table_cmd(n, t, s, fmt); }; });

    std::string claim;
    CheckOptions options;
    auto* check = app.add_subcommand("check", "Run a theorem-lab checker");
    check->add_option("claim", claim, "Claim id")->required()->check(CLI::IsMember(claim_ids()));
    check->add_option("--n", options.n)->required()->check(CLI::Range(0, 5));
    check->add_option("--seed", options.seed, "Seed for sampled scans");
    check->add_option("--samples", options.samples, "Sample count for sampled scans")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    check->add_option("--d", options.ds, "Family counts for the hilton scan")->check(CLI::Range(2, 16));
    check->callback([&] { action = [&] { return check_cmd(claim, options, fmt); }; });

    bool up = false, down = false;
    auto* closure = app.add_subcommand("closure", "Up- or down-closure of a family");
    auto* up_flag = closure->add_flag("--up", up);
    closure->add_flag("--down", down)->excludes(up_flag);
    closure->add_option("F", path_a)->required();
    closure->callback([&] {
        if (up == down) throw CLI::ValidationError("closure", "exactly one of --up or --down is required");
        action = [&] { return family_out(up ? up_closure(load_family(path_a)) : down_closure(load_family(path_a)), fmt); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        fmt = format == "text" ? Format::text : Format::json;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Result result = action();
        if (out_path.empty()) {
            out << result.body;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw Error("cannot write '" + out_path + "'");
            file << result.body;
        }
        return result.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace setmatch::cli
