#include "setmatch/orientation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "setmatch/error.hpp"

namespace setmatch {

BipartiteMultigraph::BipartiteMultigraph(int left_count, int right_count)
    : left_count_(left_count), right_count_(right_count) {
    if (left_count < 0 || right_count < 0) throw Error("negative vertex count");
}

void BipartiteMultigraph::add_edges(int left, int right, std::uint64_t multiplicity) {
    if (left < 0 || left >= left_count_ || right < 0 || right >= right_count_) {
        throw Error("edge endpoint out of range");
    }
    if (multiplicity == 0) return;
    edges_.push_back({left, right, multiplicity});
}

std::vector<MultiEdge> BipartiteMultigraph::edges() const {
    std::map<std::pair<int, int>, std::uint64_t> merged;
    for (const auto& e : edges_) merged[{e.left, e.right}] += e.multiplicity;
    std::vector<MultiEdge> out;
    out.reserve(merged.size());
    for (const auto& [key, mult] : merged) out.push_back({key.first, key.second, mult});
    return out;
}

std::vector<std::uint64_t> BipartiteMultigraph::degrees() const {
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (const auto& e : edges_) {
        deg[e.left] += e.multiplicity;
        deg[right_vertex(e.right)] += e.multiplicity;
    }
    return deg;
}

std::uint64_t BipartiteMultigraph::edge_count() const {
    std::uint64_t total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
}

std::vector<std::uint64_t> Orientation::out_degrees(int vertex_count) const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& e : oriented) out[e.from] += e.multiplicity;
    return out;
}

namespace {

class OrientationState {
public:
    OrientationState(const BipartiteMultigraph& graph, const QuotaAssignment& quotas)
        : graph_(graph), quota_(quotas), degree_(graph.degrees()), adj_(degree_.size()) {
        for (const auto& e : graph.edges()) {
            const int l = graph.left_vertex(e.left);
            const int r = graph.right_vertex(e.right);
            adj_[l][r] += e.multiplicity;
            adj_[r][l] += e.multiplicity;
        }
        for (std::size_t v = 0; v < degree_.size(); ++v) {
            if (2 * quota_[v] > degree_[v]) {
                throw Error("quota invariant violated at vertex " + std::to_string(v) + ": 2*" +
                            std::to_string(quota_[v]) + " > degree " + std::to_string(degree_[v]));
            }
            if (degree_[v] == 1) ones_.insert(static_cast<int>(v));
            if (degree_[v] > 0) live_.insert(static_cast<int>(v));
        }
    }

    Orientation run() {
        while (true) {
            peel_degree_one();
            if (live_.empty()) break;
            process_cycle(find_cycle(*live_.begin()));
        }
        for (std::size_t v = 0; v < quota_.size(); ++v) {
            if (quota_[v] != 0) throw std::logic_error("orientation left unmet quota");
        }
        Orientation result;
        for (const auto& [key, mult] : oriented_) result.oriented.push_back({key.first, key.second, mult});
        for (const auto& [key, mult] : discarded_) {
            result.discarded.push_back({key.first, key.second - graph_.left_count(), mult});
        }
        return result;
    }

private:
    void remove_edge(int v, int w) {
        auto drop = [this](int a, int b) {
            auto it = adj_[a].find(b);
            if (--it->second == 0) adj_[a].erase(it);
            --degree_[a];
            ones_.erase(a);
            if (degree_[a] == 1) ones_.insert(a);
            if (degree_[a] == 0) live_.erase(a);
        };
        drop(v, w);
        drop(w, v);
    }

    void orient(int from, int to) {
        ++oriented_[{from, to}];
        --quota_[from];
    }

    void discard(int v, int w) {
        const int l = graph_.is_left(v) ? v : w;
        const int r = graph_.is_left(v) ? w : v;
        ++discarded_[{l, r}];
    }

    void check_invariant(int v) const {
        if (2 * quota_[v] > degree_[v]) throw std::logic_error("quota invariant broken during orientation");
    }

    void peel_degree_one() {
        while (!ones_.empty()) {
            const int v = *ones_.begin();
            const int w = adj_[v].begin()->first;
            if (quota_[v] != 0) throw std::logic_error("degree-one vertex with positive quota");
            remove_edge(v, w);
            if (quota_[w] > 0) {
                orient(w, v);
            } else {
                discard(v, w);
            }
            check_invariant(w);
        }
    }

    std::vector<int> find_cycle(int start) const {
        std::vector<int> path{start};
        std::unordered_map<int, std::size_t> position{{start, 0}};
        int prev = -1;
        while (true) {
            const int cur = path.back();
            int next = -1;
            for (const auto& [nb, mult] : adj_[cur]) {
                if (nb != prev || mult >= 2) {
                    next = nb;
                    break;
                }
            }
            if (next < 0) throw std::logic_error("no cycle continuation from a vertex of degree >= 2");
            if (auto it = position.find(next); it != position.end()) {
                return {path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end()};
            }
            position[next] = path.size();
            path.push_back(next);
            prev = cur;
        }
    }

    void process_cycle(const std::vector<int>& cycle) {
        const std::size_t k = cycle.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int v = cycle[i];
            const int w = cycle[(i + 1) % k];
            remove_edge(v, w);
            if (quota_[v] > 0) {
                orient(v, w);
            } else {
                discard(v, w);
            }
        }
        for (int v : cycle) check_invariant(v);
    }

    const BipartiteMultigraph& graph_;
    QuotaAssignment quota_;
    std::vector<std::uint64_t> degree_;
    std::vector<std::map<int, std::uint64_t>> adj_;
    std::set<int> ones_;
    std::set<int> live_;
    std::map<std::pair<int, int>, std::uint64_t> oriented_;
    std::map<std::pair<int, int>, std::uint64_t> discarded_;
};

}  // namespace

Orientation orient_quotas(const BipartiteMultigraph& graph, const QuotaAssignment& quotas) {
    if (quotas.size() != static_cast<std::size_t>(graph.vertex_count())) {
        throw Error("quota assignment has " + std::to_string(quotas.size()) + " entries for " +
                    std::to_string(graph.vertex_count()) + " vertices");
    }
    return OrientationState(graph, quotas).run();
}

}  // namespace setmatch
