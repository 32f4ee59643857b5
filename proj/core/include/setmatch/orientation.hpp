#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace setmatch {

// Left vertex i has id i, right vertex j has id left_count() + j.
struct MultiEdge {
    int left = 0;
    int right = 0;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

struct DirectedEdge {
    int from = 0;  // vertex id
    int to = 0;    // vertex id
    std::uint64_t multiplicity = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

class BipartiteMultigraph {
public:
    BipartiteMultigraph(int left_count, int right_count);

    void add_edges(int left, int right, std::uint64_t multiplicity = 1);

    int left_count() const { return left_count_; }
    int right_count() const { return right_count_; }
    int vertex_count() const { return left_count_ + right_count_; }
    int left_vertex(int i) const { return i; }
    int right_vertex(int j) const { return left_count_ + j; }
    bool is_left(int v) const { return v < left_count_; }

    // Parallel edges merged, sorted by (left, right).
    std::vector<MultiEdge> edges() const;
    std::vector<std::uint64_t> degrees() const;
    std::uint64_t edge_count() const;

private:
    int left_count_;
    int right_count_;
    std::vector<MultiEdge> edges_;
};

// u_v per vertex id; must satisfy 2 u_v <= d_v.
using QuotaAssignment = std::vector<std::uint64_t>;

struct Orientation {
    std::vector<DirectedEdge> oriented;  // sorted by (from, to)
    std::vector<MultiEdge> discarded;    // sorted by (left, right)

    std::vector<std::uint64_t> out_degrees(int vertex_count) const;
};

// Picks a subset of edges and orients them so that every vertex v has
// out-degree exactly u_v. Degree-one vertices are peeled first (the edge is
// charged to the neighbour's quota or dropped), then an even cycle is walked
// from the lowest-index live vertex and each edge is charged to its tail when
// the tail still has quota. Throws if the quota invariant fails on input.
Orientation orient_quotas(const BipartiteMultigraph& graph, const QuotaAssignment& quotas);

}  // namespace setmatch
