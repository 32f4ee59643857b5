#include <algorithm>
#include <array>
#include <bit>

#include "setmatch/error.hpp"
#include "setmatch/oracles.hpp"

namespace setmatch {

namespace {

// Maximum clique over at most 32 vertices, greedy colouring bound.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<std::uint32_t> adj) : adj_(std::move(adj)) {}

    std::uint32_t run() {
        const auto count = static_cast<int>(adj_.size());
        const std::uint32_t all = count == 32 ? ~0U : ((1U << count) - 1);
        if (all) expand(0, all);
        return best_set_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(std::uint32_t current, std::uint32_t candidates) {
        ++nodes_;
        std::array<int, 32> order{};
        std::array<int, 32> bound{};
        int len = 0;
        // Colour classes in vertex-index order; bound[i] = colour of order[i].
        std::uint32_t uncolored = candidates;
        for (int colour = 1; uncolored; ++colour) {
            std::uint32_t avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~(1U << v);
                avail &= ~adj_[v];
                uncolored &= ~(1U << v);
                order[len] = v;
                bound[len] = colour;
                ++len;
            }
        }
        const int size = std::popcount(current);
        for (int i = len - 1; i >= 0; --i) {
            if (size + bound[i] <= best_) return;
            const int v = order[i];
            const std::uint32_t grown = current | (1U << v);
            const std::uint32_t next = candidates & adj_[v];
            if (next) {
                expand(grown, next);
            } else if (size + 1 > best_) {
                best_ = size + 1;
                best_set_ = grown;
            }
            candidates &= ~(1U << v);
        }
    }

    std::vector<std::uint32_t> adj_;
    int best_ = 0;
    std::uint32_t best_set_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchReport max_subfamily(const Family& d, PairwiseProperty property) {
    if (d.size() > kMaxSearchFamily) {
        throw Error("max_subfamily supports |D| <= 32, got " + std::to_string(d.size()));
    }
    const int n = d.n();
    std::vector<SetMask> vertices;
    for (SetMask s : d) {
        if (property.admits(s, s, n)) vertices.push_back(s);
    }
    // Larger sets first.
    std::stable_sort(vertices.begin(), vertices.end(),
                     [](SetMask a, SetMask b) { return popcount(a) > popcount(b); });

    std::vector<std::uint32_t> adj(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i != j && property.admits(vertices[i], vertices[j], n)) adj[i] |= 1U << j;
        }
    }
    CliqueSearch search(std::move(adj));
    const std::uint32_t chosen = search.run();

    std::vector<SetMask> witness;
    for (std::uint32_t rest = chosen; rest; rest &= rest - 1) {
        witness.push_back(vertices[std::countr_zero(rest)]);
    }
    SearchReport report;
    report.optimum = witness.size();
    report.witness = Family(n, std::move(witness));
    report.nodes_explored = search.nodes();
    return report;
}

}  // namespace setmatch
