#include <set>

#include "setmatch/matching.hpp"

namespace setmatch {

namespace {

std::string pair_text(SetMask a, SetMask b) { return "(" + format_set(a) + "," + format_set(b) + ")"; }

}  // namespace

Verdict verify_weighted_matching(const WeightedMatching& p, const WeightFn& f, const WeightFn& g) {
    if (f.n() != g.n() || p.n() != f.n()) return Verdict::fail("ground sizes differ");
    for (const auto& [key, weight] : p.entries()) {
        const auto [x, y] = key;
        if (x >= f.domain_size() || y >= g.domain_size()) {
            return Verdict::fail("entry " + pair_text(x, y) + " outside 2^[n]");
        }
        if ((x & y) != 0) return Verdict::fail("(i) support not disjoint at " + pair_text(x, y));
    }
    for (SetMask x = 0; x < f.domain_size(); ++x) {
        const std::uint64_t row = p.row_sum(x);
        if (row != f(x)) {
            return Verdict::fail("(iii) row sum at " + format_set(x) + " is " + std::to_string(row) +
                                 ", expected f = " + std::to_string(f(x)));
        }
    }
    std::vector<std::uint64_t> column(g.domain_size(), 0);
    for (const auto& [key, weight] : p.entries()) column[key.second] += weight;
    for (SetMask y = 0; y < g.domain_size(); ++y) {
        if (column[y] > g(y)) {
            return Verdict::fail("(iii) column sum at " + format_set(y) + " is " + std::to_string(column[y]) +
                                 ", exceeds g = " + std::to_string(g(y)));
        }
    }
    if (p.total() != f.total()) {
        return Verdict::fail("(ii) |p| = " + std::to_string(p.total()) + " but |f| = " + std::to_string(f.total()));
    }
    return Verdict::pass();
}

Verdict verify_pair_matching(const PairMatching& m, const Family& a) {
    if (m.n != a.n()) return Verdict::fail("ground sizes differ");
    std::set<SetMask> used;
    for (const auto& [x, y] : m.pairs) {
        if (!a.contains(x) || !a.contains(y)) {
            return Verdict::fail("pair " + pair_text(x, y) + " uses a set outside the family");
        }
        if ((x & y) != 0) return Verdict::fail("pair " + pair_text(x, y) + " is not disjoint");
        if (!used.insert(x).second) return Verdict::fail("set " + format_set(x) + " appears in two pairs");
        if (!used.insert(y).second) return Verdict::fail("set " + format_set(y) + " appears in two pairs");
    }
    const std::size_t expected = a.size() - a.size() % 2;
    if (used.size() != expected) {
        return Verdict::fail("covers " + std::to_string(used.size()) + " sets, expected " + std::to_string(expected));
    }
    if (a.size() % 2 == 1 && (used.count(0) || !a.contains(0))) {
        return Verdict::fail("odd family and the leftover set is not the empty set");
    }
    return Verdict::pass();
}

Verdict verify_injection(const Injection& phi, const Family& f, const Family& g) {
    if (phi.n != f.n() || f.n() != g.n()) return Verdict::fail("ground sizes differ");
    std::set<SetMask> targets;
    for (const auto& [x, y] : phi.image) {
        if (!f.contains(x)) return Verdict::fail("source " + format_set(x) + " not in F");
        if (!g.contains(y)) return Verdict::fail("image " + format_set(y) + " not in G");
        if ((x & y) != 0) return Verdict::fail("pair " + pair_text(x, y) + " is not disjoint");
        if (!targets.insert(y).second) return Verdict::fail("image " + format_set(y) + " used twice");
    }
    for (SetMask x : f) {
        if (!phi.image.count(x)) return Verdict::fail("set " + format_set(x) + " of F is not matched");
    }
    return Verdict::pass();
}

}  // namespace setmatch
