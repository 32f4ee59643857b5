#include "setmatch/matching.hpp"

#include <algorithm>
#include <deque>

#include "setmatch/error.hpp"
#include "setmatch/orientation.hpp"

namespace setmatch {

void WeightedMatching::add(SetMask x, SetMask y, std::uint64_t weight) {
    if (weight == 0) return;
    entries_[{x, y}] += weight;
}

std::uint64_t WeightedMatching::at(SetMask x, SetMask y) const {
    auto it = entries_.find({x, y});
    return it == entries_.end() ? 0 : it->second;
}

std::uint64_t WeightedMatching::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, w] : entries_) sum += w;
    return sum;
}

std::uint64_t WeightedMatching::row_sum(SetMask x) const {
    std::uint64_t sum = 0;
    for (auto it = entries_.lower_bound({x, 0}); it != entries_.end() && it->first.first == x; ++it) {
        sum += it->second;
    }
    return sum;
}

std::uint64_t WeightedMatching::column_sum(SetMask y) const {
    std::uint64_t sum = 0;
    for (const auto& [key, w] : entries_) {
        if (key.second == y) sum += w;
    }
    return sum;
}

namespace {

void check_pair(const WeightFn& f, const WeightFn& g) {
    if (f.n() != g.n()) throw Error("weight functions over different ground sizes");
    if (!f.is_monotone()) throw Error("f is not monotone decreasing");
    if (!g.is_monotone()) throw Error("g is not monotone decreasing");
    if (f.total() > g.total()) {
        throw Error("|f| = " + std::to_string(f.total()) + " exceeds |g| = " + std::to_string(g.total()));
    }
}

// Merges X and X + {1} for every X over [2,n], re-indexed onto [n-1].
WeightFn fold_first_element(const WeightFn& w) {
    const int m = w.n() - 1;
    WeightFn folded(m);
    for (SetMask x = 0; x < folded.domain_size(); ++x) {
        folded[x] = w(x << 1) + w((x << 1) | 1U);
    }
    return folded;
}

// Requires |f| = |g|, both monotone.
WeightedMatching match_balanced(const WeightFn& f, const WeightFn& g) {
    const int n = f.n();
    WeightedMatching p(n);
    if (n == 0) {
        p.add(0, 0, f(0));
        return p;
    }

    const WeightedMatching reduced = match_balanced(fold_first_element(f), fold_first_element(g));

    const int half = 1 << (n - 1);
    BipartiteMultigraph graph(half, half);
    for (const auto& [key, weight] : reduced.entries()) {
        graph.add_edges(static_cast<int>(key.first), static_cast<int>(key.second), weight);
    }
    QuotaAssignment quotas(static_cast<std::size_t>(graph.vertex_count()));
    for (int x = 0; x < half; ++x) {
        const SetMask with_first = (static_cast<SetMask>(x) << 1) | 1U;
        quotas[graph.left_vertex(x)] = f(with_first);
        quotas[graph.right_vertex(x)] = g(with_first);
    }

    const Orientation orientation = orient_quotas(graph, quotas);
    for (const auto& e : orientation.oriented) {
        if (graph.is_left(e.from)) {
            const auto x = static_cast<SetMask>(e.from);
            const auto y = static_cast<SetMask>(e.to - half);
            p.add((x << 1) | 1U, y << 1, e.multiplicity);
        } else {
            const auto y = static_cast<SetMask>(e.from - half);
            const auto x = static_cast<SetMask>(e.to);
            p.add(x << 1, (y << 1) | 1U, e.multiplicity);
        }
    }
    for (const auto& e : orientation.discarded) {
        p.add(static_cast<SetMask>(e.left) << 1, static_cast<SetMask>(e.right) << 1, e.multiplicity);
    }
    return p;
}

}  // namespace

WeightFn normalize_g(const WeightFn& f, const WeightFn& g) {
    check_pair(f, g);
    WeightFn out = g;
    std::uint64_t excess = g.total() - f.total();
    const int n = g.n();
    for (std::size_t i = out.domain_size(); i-- > 0 && excess > 0;) {
        const auto x = static_cast<SetMask>(i);
        std::uint64_t floor = 0;
        for (int e = 0; e < n; ++e) {
            const SetMask bit = SetMask{1} << e;
            if (!(x & bit)) floor = std::max(floor, out(x | bit));
        }
        const std::uint64_t cut = std::min(excess, out(x) - floor);
        out[x] -= cut;
        excess -= cut;
    }
    return out;
}

WeightedMatching weighted_disjoint_matching(const WeightFn& f, const WeightFn& g) {
    check_pair(f, g);
    return match_balanced(f, normalize_g(f, g));
}

Injection matched_into(const Family& f, const Family& g) {
    if (f.n() != g.n()) throw Error("ambient size mismatch");
    if (!is_down_set(f)) throw Error("first family is not a down-set");
    if (!is_down_set(g)) throw Error("second family is not a down-set");
    if (f.size() > g.size()) {
        throw Error("|F| = " + std::to_string(f.size()) + " exceeds |G| = " + std::to_string(g.size()));
    }
    const WeightedMatching p =
        weighted_disjoint_matching(WeightFn::characteristic(f), WeightFn::characteristic(g));
    Injection phi{f.n(), {}};
    for (const auto& [key, weight] : p.entries()) phi.image.emplace(key.first, key.second);
    return phi;
}

namespace {

std::map<SetMask, SetMask> partner_map(const PairMatching& m, const char* which) {
    std::map<SetMask, SetMask> partner;
    for (const auto& [a, b] : m.pairs) {
        if (a == b || !partner.emplace(a, b).second || !partner.emplace(b, a).second) {
            throw Error(std::string(which) + " is not a matching: " + format_set(a) + " or " +
                        format_set(b) + " repeats");
        }
    }
    return partner;
}

}  // namespace

TwoColoring two_coloring(const PairMatching& m1, const PairMatching& m2) {
    const auto p1 = partner_map(m1, "first matching");
    const auto p2 = partner_map(m2, "second matching");
    std::map<SetMask, std::vector<SetMask>> adj;
    for (const auto& [v, w] : p1) adj[v].push_back(w);
    for (const auto& [v, w] : p2) adj[v].push_back(w);

    TwoColoring out;
    int next_component = 0;
    for (const auto& [start, unused] : adj) {
        if (out.color.count(start)) continue;
        std::deque<SetMask> queue{start};
        out.color[start] = 0;
        out.component[start] = next_component;
        while (!queue.empty()) {
            const SetMask v = queue.front();
            queue.pop_front();
            for (SetMask w : adj[v]) {
                auto it = out.color.find(w);
                if (it == out.color.end()) {
                    out.color[w] = 1 - out.color[v];
                    out.component[w] = next_component;
                    queue.push_back(w);
                } else if (it->second == out.color[v]) {
                    throw Error("union of matchings is not bipartite");
                }
            }
        }
        ++next_component;
    }
    return out;
}

}  // namespace setmatch
