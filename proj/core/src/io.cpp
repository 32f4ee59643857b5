#include "setmatch/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

#include "setmatch/error.hpp"

namespace setmatch {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

long long parse_int(std::string_view token, const char* what) {
    token = trim(token);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw Error(std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

int checked_ground(long long n) {
    if (n < 0 || n > kMaxGround) throw Error("ground size n=" + std::to_string(n) + " out of range");
    return static_cast<int>(n);
}

SetMask element_mask(long long e, int n) {
    if (e < 1 || e > n) {
        throw Error("element '" + std::to_string(e) + "' outside [1," + std::to_string(n) + "]");
    }
    return element_bit(static_cast<int>(e));
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(std::string("field '") + key + "' has the wrong type");
    }
}

json set_elements(SetMask s) {
    json out = json::array();
    for (int i = 0; s >> i; ++i) {
        if ((s >> i) & 1U) out.push_back(i + 1);
    }
    return out;
}

SetMask checked_mask(long long bits, int n) {
    if (bits < 0 || static_cast<unsigned long long>(bits) > full_mask(n)) {
        throw Error("mask '" + std::to_string(bits) + "' is not a subset of [" + std::to_string(n) + "]");
    }
    return static_cast<SetMask>(bits);
}

json header(const char* kind, int n) {
    return json{{"schema", kSchemaVersion}, {"kind", kind}, {"n", n}};
}

std::vector<std::pair<SetMask, SetMask>> parse_pairs(const json& j, int n) {
    std::vector<std::pair<SetMask, SetMask>> out;
    for (const auto& item : field<json>(j, "pairs")) {
        if (!item.is_array() || item.size() != 2) throw Error("pair entry must be [A,B]");
        out.emplace_back(checked_mask(item[0].get<long long>(), n), checked_mask(item[1].get<long long>(), n));
    }
    return out;
}

json witness_json(const Witness& w) {
    json out{{"note", w.note}, {"families", json::array()}};
    for (const auto& f : w.families) out["families"].push_back(json::parse(family_to_json(f)));
    if (w.ratios) {
        const auto& r = *w.ratios;
        out["ratios"] = {{"alpha", r.alpha.str()},       {"beta", r.beta.str()},
                         {"alpha_up", r.alpha_up.str()}, {"alpha_down", r.alpha_down.str()},
                         {"beta_up", r.beta_up.str()},   {"beta_down", r.beta_down.str()}};
    }
    return out;
}

json report_json(const CheckReport& r) {
    json out{{"claim", r.claim_id},         {"status", to_string(r.status)}, {"instances", r.instance_count},
             {"bound", r.bound},            {"achieved", r.achieved},        {"notes", r.notes}};
    if (r.seed) out["seed"] = *r.seed;
    if (r.witness) out["witness"] = witness_json(*r.witness);
    if (!r.parts.empty()) {
        out["parts"] = json::array();
        for (const auto& p : r.parts) out["parts"].push_back(report_json(p));
    }
    return out;
}

void report_text(const CheckReport& r, int depth, std::ostringstream& out) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    out << indent << r.claim_id << ": " << to_string(r.status) << " (instances " << r.instance_count << ", bound "
        << r.bound << ", achieved " << r.achieved << ")";
    if (r.seed) out << " seed " << *r.seed;
    out << '\n';
    for (const auto& note : r.notes) out << indent << "  note: " << note << '\n';
    if (r.witness && r.status == Status::counterexample) {
        out << indent << "  witness: " << r.witness->note << '\n';
        for (const auto& f : r.witness->families) out << indent << "    " << format_family(f) << '\n';
    }
    for (const auto& p : r.parts) report_text(p, depth + 1, out);
}

}  // namespace

Family parse_family_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int n = -1;
    std::vector<SetMask> sets;
    while (std::getline(in, raw)) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (n < 0) {
            if (line.substr(0, 2) != "n=") throw Error("expected header 'n=<k>', got '" + std::string(line) + "'");
            n = checked_ground(parse_int(line.substr(2), "ground size"));
            continue;
        }
        if (line == "-") {
            sets.push_back(0);
            continue;
        }
        SetMask s = 0;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            s |= element_mask(parse_int(rest.substr(0, comma), "element"), n);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        sets.push_back(s);
    }
    if (n < 0) throw Error("missing header 'n=<k>'");
    return Family(n, std::move(sets));
}

std::string family_to_text(const Family& f) {
    std::ostringstream out;
    out << "n=" << f.n() << '\n';
    for (SetMask s : f) {
        if (s == 0) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int i = 0; s >> i; ++i) {
            if ((s >> i) & 1U) {
                out << (first ? "" : ",") << i + 1;
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

Family parse_family_json(std::string_view text) {
    const json j = parse_json(text);
    const int n = checked_ground(field<long long>(j, "n"));
    std::vector<SetMask> sets;
    for (const auto& set : field<json>(j, "sets")) {
        if (!set.is_array()) throw Error("set entry '" + set.dump() + "' is not an array");
        SetMask s = 0;
        for (const auto& e : set) {
            if (!e.is_number_integer()) throw Error("element '" + e.dump() + "' is not an integer");
            s |= element_mask(e.get<long long>(), n);
        }
        sets.push_back(s);
    }
    return Family(n, std::move(sets));
}

std::string family_to_json(const Family& f) {
    json sets = json::array();
    for (SetMask s : f) sets.push_back(set_elements(s));
    return json{{"n", f.n()}, {"sets", sets}}.dump();
}

Family parse_family(std::string_view text) {
    const std::string_view body = trim(text);
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && body[first] == '{') return parse_family_json(body);
    return parse_family_text(text);
}

WeightFn parse_weight_fn(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '{') return WeightFn::characteristic(parse_family(text));
    const json j = parse_json(text);
    if (j.contains("sets")) return WeightFn::characteristic(parse_family_json(text));
    const int n = checked_ground(field<long long>(j, "n"));
    std::vector<std::uint64_t> values;
    for (const auto& v : field<json>(j, "values")) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            throw Error("weight '" + v.dump() + "' is not a natural number");
        }
        values.push_back(v.get<std::uint64_t>());
    }
    return WeightFn(n, std::move(values));
}

std::string weight_fn_to_json(const WeightFn& w) {
    return json{{"n", w.n()}, {"values", std::vector<std::uint64_t>(w.values().begin(), w.values().end())}}.dump();
}

std::string weighted_matching_to_json(const WeightedMatching& p) {
    json out = header("weighted", p.n());
    out["p"] = json::array();
    for (const auto& [key, w] : p.entries()) out["p"].push_back({key.first, key.second, w});
    return out.dump();
}

WeightedMatching parse_weighted_matching(std::string_view text) {
    const json j = parse_json(text);
    const int n = checked_ground(field<long long>(j, "n"));
    WeightedMatching p(n);
    for (const auto& item : field<json>(j, "p")) {
        if (!item.is_array() || item.size() != 3) throw Error("weighted entry must be [X,Y,w]");
        const auto w = item[2].get<long long>();
        if (w <= 0) throw Error("weight '" + std::to_string(w) + "' must be positive");
        p.add(checked_mask(item[0].get<long long>(), n), checked_mask(item[1].get<long long>(), n),
              static_cast<std::uint64_t>(w));
    }
    return p;
}

std::string pair_matching_to_json(const PairMatching& m) {
    json out = header("self", m.n);
    out["pairs"] = json::array();
    for (const auto& [a, b] : m.pairs) out["pairs"].push_back({a, b});
    return out.dump();
}

PairMatching parse_pair_matching(std::string_view text) {
    const json j = parse_json(text);
    const int n = checked_ground(field<long long>(j, "n"));
    return {n, parse_pairs(j, n)};
}

std::string injection_to_json(const Injection& phi) {
    json out = header("injection", phi.n);
    out["pairs"] = json::array();
    for (const auto& [a, b] : phi.image) out["pairs"].push_back({a, b});
    return out.dump();
}

Injection parse_injection(std::string_view text) {
    const json j = parse_json(text);
    const int n = checked_ground(field<long long>(j, "n"));
    Injection phi{n, {}};
    for (const auto& [a, b] : parse_pairs(j, n)) {
        if (!phi.image.emplace(a, b).second) throw Error("source " + format_set(a) + " mapped twice");
    }
    return phi;
}

std::string matching_kind(std::string_view text) { return field<std::string>(parse_json(text), "kind"); }

std::string report_to_json(const CheckReport& r) {
    json out = report_json(r);
    out["schema"] = kSchemaVersion;
    return out.dump(2);
}

std::string report_to_text(const CheckReport& r) {
    std::ostringstream out;
    report_text(r, 0, out);
    return out.str();
}

std::string m_table_to_tsv(const MTable& t) {
    std::ostringstream out;
    out << "n\tt\ts\tvalue\n";
    for (const auto& e : t.entries()) out << e.n << '\t' << e.t << '\t' << e.s << '\t' << e.value << '\n';
    return out.str();
}

std::string m_table_to_json(const MTable& t) {
    json rows = json::array();
    for (const auto& e : t.entries()) rows.push_back({{"n", e.n}, {"t", e.t}, {"s", e.s}, {"value", e.value}});
    return json{{"schema", kSchemaVersion}, {"kind", "m-table"}, {"entries", rows}}.dump(2);
}

}  // namespace setmatch
