#include "setmatch/matching.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "setmatch/error.hpp"

namespace setmatch {

namespace {

// Restricts a family whose members avoid bit n-1 to the ground set [n-1].
Family drop_top_element(const Family& f) {
    return Family(f.n() - 1, std::vector<SetMask>(f.begin(), f.end()));
}

// Smallest mask among the sets of `deletion` that are maximal there and
// missing from `link`.
SetMask pick_maximal_outside(const Family& deletion, const Family& link) {
    for (SetMask s : deletion) {
        if (link.contains(s)) continue;
        bool maximal = true;
        for (int e = 0; e < deletion.n() && maximal; ++e) {
            const SetMask bit = SetMask{1} << e;
            if (!(s & bit) && deletion.contains(s | bit)) maximal = false;
        }
        if (maximal) return s;
    }
    throw std::logic_error("no maximal set outside the link");
}

PairMatching match_down_set(const Family& a) {
    const int n = a.n();
    PairMatching out{n, {}};
    if (n == 0 || a.empty()) return out;  // at most {emptyset}: nothing to pair

    const SetMask top = element_bit(n);
    auto [link_full, deletion_full] = link_and_deletion(a, n);
    const Family link = drop_top_element(link_full);
    Family deletion = drop_top_element(deletion_full);

    std::optional<SetMask> held_back;
    if (link.size() % 2 == 1 && deletion.size() % 2 == 0) {
        held_back = pick_maximal_outside(deletion, link);
        std::vector<SetMask> rest;
        std::copy_if(deletion.begin(), deletion.end(), std::back_inserter(rest),
                     [&](SetMask s) { return s != *held_back; });
        deletion = Family(n - 1, std::move(rest));
    }

    const PairMatching m1 = match_down_set(link);
    const PairMatching m2 = match_down_set(deletion);

    TwoColoring coloring = two_coloring(m1, m2);
    // The empty set must sit on the far side of its m1 pair: when it is
    // unmatched in m2 its copy {n} could not be covered otherwise.
    if (auto it = coloring.component.find(0); it != coloring.component.end()) {
        const int comp = it->second;
        if (coloring.color[0] == 0) {
            for (auto& [v, c] : coloring.color) {
                if (coloring.component[v] == comp) c = 1 - c;
            }
        }
    }

    std::set<SetMask> independent;
    for (auto [x, y] : m1.pairs) {
        if (coloring.color.at(x) != 0) std::swap(x, y);
        independent.insert(x);
        out.pairs.emplace_back(x, y | top);
    }
    for (auto [c, d] : m2.pairs) {
        if (independent.count(c)) {
            c |= top;
        } else if (independent.count(d)) {
            d |= top;
        }
        out.pairs.emplace_back(c, d);
    }

    const bool link_odd = link.size() % 2 == 1;
    const bool deletion_odd = deletion.size() % 2 == 1;
    if (link_odd && deletion_odd) {
        out.pairs.emplace_back(top, held_back ? *held_back : SetMask{0});
    }
    return out;
}

}  // namespace

PairMatching self_matching(const Family& a) {
    if (!is_down_set(a)) throw Error("self_matching needs a down-set");
    PairMatching m = match_down_set(a);
    for (auto& [x, y] : m.pairs) {
        if (y < x) std::swap(x, y);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

}  // namespace setmatch
