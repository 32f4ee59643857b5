#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>

#include "setmatch/error.hpp"
#include "setmatch/oracles.hpp"

namespace setmatch {

BipartiteGraph kneser_bipartite(const Family& f, const Family& g) {
    if (f.n() != g.n()) throw Error("ambient size mismatch");
    BipartiteGraph graph;
    graph.left_count = static_cast<int>(f.size());
    graph.right_count = static_cast<int>(g.size());
    graph.adj.resize(f.size());
    auto left = f.members();
    auto right = g.members();
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if ((left[i] & right[j]) == 0) graph.adj[i].push_back(static_cast<int>(j));
        }
    }
    return graph;
}

BipartiteMatchingResult max_bipartite_matching(const BipartiteGraph& graph) {
    const int nl = graph.left_count;
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> match_left(nl, -1);
    std::vector<int> match_right(graph.right_count, -1);
    std::vector<int> dist(nl);

    auto bfs = [&] {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            if (match_left[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = inf;
            }
        }
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : graph.adj[u]) {
                const int w = match_right[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : graph.adj[u]) {
            const int w = match_right[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };

    std::size_t size = 0;
    while (bfs()) {
        for (int u = 0; u < nl; ++u) {
            if (match_left[u] < 0 && dfs(u)) ++size;
        }
    }
    return {size, std::move(match_left)};
}

std::optional<std::vector<int>> hall_violator(const BipartiteGraph& graph) {
    const int nl = graph.left_count;
    if (nl > 25) throw Error("hall_violator is exhaustive and capped at 25 left vertices");
    const std::size_t words = (static_cast<std::size_t>(graph.right_count) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> nbr(nl, std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < nl; ++u) {
        for (int v : graph.adj[u]) nbr[u][v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    std::vector<std::uint64_t> acc(words);
    for (int k = 1; k <= nl; ++k) {
        const std::uint64_t limit = std::uint64_t{1} << nl;
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::uint64_t rest = s; rest; rest &= rest - 1) {
                const auto& row = nbr[std::countr_zero(rest)];
                for (std::size_t w = 0; w < words; ++w) acc[w] |= row[w];
            }
            int reach = 0;
            for (auto w : acc) reach += std::popcount(w);
            if (reach < k) {
                std::vector<int> witness;
                for (std::uint64_t rest = s; rest; rest &= rest - 1) witness.push_back(std::countr_zero(rest));
                return witness;
            }
            const std::uint64_t low = s & (~s + 1);
            const std::uint64_t ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    return std::nullopt;
}

namespace {

// Dinic's algorithm on an explicit residual network.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

    void add_arc(int from, int to, std::uint64_t cap) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::uint64_t run(int source, int sink) {
        std::uint64_t flow = 0;
        while (levels(source, sink)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (std::uint64_t pushed = push(source, sink, std::numeric_limits<std::uint64_t>::max())) {
                flow += pushed;
            }
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        std::uint64_t cap;
    };

    bool levels(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> q{source};
        level_[source] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int id : adj_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push_back(a.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    std::uint64_t push(int v, int sink, std::uint64_t limit) {
        if (v == sink) return limit;
        for (auto& i = it_[v]; i < adj_[v].size(); ++i) {
            const int id = adj_[v][i];
            Arc& a = arcs_[id];
            if (a.cap == 0 || level_[a.to] != level_[v] + 1) continue;
            if (std::uint64_t got = push(a.to, sink, std::min(limit, a.cap))) {
                a.cap -= got;
                arcs_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

}  // namespace

bool flow_feasibility(const WeightFn& f, const WeightFn& g) {
    if (f.n() != g.n()) throw Error("weight functions over different ground sizes");
    if (f.n() > 10) throw Error("flow_feasibility is capped at n = 10");
    const int size = static_cast<int>(f.domain_size());
    const int source = 2 * size;
    const int sink = source + 1;
    MaxFlow net(sink + 1);
    const std::uint64_t unbounded = f.total();
    for (int x = 0; x < size; ++x) {
        if (f(static_cast<SetMask>(x)) == 0) continue;
        net.add_arc(source, x, f(static_cast<SetMask>(x)));
        for (int y = 0; y < size; ++y) {
            if ((x & y) == 0 && g(static_cast<SetMask>(y)) > 0) net.add_arc(x, size + y, unbounded);
        }
    }
    for (int y = 0; y < size; ++y) {
        if (g(static_cast<SetMask>(y)) > 0) net.add_arc(size + y, sink, g(static_cast<SetMask>(y)));
    }
    return net.run(source, sink) == f.total();
}

std::string PairwiseProperty::describe() const {
    if (t == 1 && s == 0) return "intersecting";
    if (t == 1 && s == 1) return "IU";
    if (s == 0) return std::to_string(t) + "-intersecting";
    if (t == 0) return std::to_string(s) + "-union";
    return "(" + std::to_string(t) + "," + std::to_string(s) + ")-family";
}

std::size_t MTable::value(int n, int t, int s) const {
    for (const auto& e : entries_) {
        if (e.n == n && e.t == t && e.s == s) return e.value;
    }
    throw Error("m(" + std::to_string(n) + "," + std::to_string(t) +
                (s ? "," + std::to_string(s) : std::string{}) + ") not tabulated");
}

bool MTable::has(int n, int t, int s) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const MTableEntry& e) { return e.n == n && e.t == t && e.s == s; });
}

MTable m_table(int n_max, int t_max, int s_max) {
    if (n_max < 1 || n_max > kMaxTableGround) throw Error("m_table needs 1 <= n <= 5");
    if (t_max < 1 || s_max < 0) throw Error("m_table needs t >= 1 and s >= 0");
    MTable table;
    for (int n = 1; n <= n_max; ++n) {
        const Family cube = Family::power_set(n);
        for (int t = 1; t <= t_max; ++t) {
            table.add({n, t, 0, max_subfamily(cube, PairwiseProperty::t_intersecting(t)).optimum});
            for (int s = 1; s <= s_max; ++s) {
                table.add({n, t, s, max_subfamily(cube, PairwiseProperty::ts(t, s)).optimum});
            }
        }
    }
    return table;
}

}  // namespace setmatch
