#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setmatch/family.hpp"
#include "setmatch/small_family.hpp"
#include "setmatch/weight_fn.hpp"

namespace setmatch {

struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> adj;  // left index -> right indices
};

// KG(F, G): left = members of F, right = members of G (ascending mask
// order), edges join disjoint sets.
BipartiteGraph kneser_bipartite(const Family& f, const Family& g);

struct BipartiteMatchingResult {
    std::size_t size = 0;
    std::vector<int> match_left;  // right partner per left vertex, or -1
};

// Hopcroft-Karp.
BipartiteMatchingResult max_bipartite_matching(const BipartiteGraph& graph);

// Smallest (then first in Gosper order) left subset S with |N(S)| < |S|, or
// nullopt when the left side can be perfectly matched. Exhaustive; the left
// side is capped at 25 vertices.
std::optional<std::vector<int>> hall_violator(const BipartiteGraph& graph);

// True iff a transport plan with row sums f(X), column sums <= g(Y) and
// support on disjoint pairs exists, decided by an integral max-flow. n <= 10.
bool flow_feasibility(const WeightFn& f, const WeightFn& g);

// Every down-set of 2^[n], n <= 6, as a packed word. Built from pairs
// link <= deletion over [n-1]; the order is deletion-major.
std::vector<FamilyWord> down_set_words(int n);
void for_each_down_set(int n, const std::function<void(const Family&)>& visit);
std::vector<Family> enumerate_down_sets(int n);

// |A & B| >= t and |A | B| <= n - s. t = 0 / s = 0 switch a side off.
struct PairwiseProperty {
    int t = 1;
    int s = 0;

    bool admits(SetMask a, SetMask b, int n) const {
        return popcount(a & b) >= t && popcount(a | b) <= n - s;
    }
    std::string describe() const;

    static PairwiseProperty intersecting() { return {1, 0}; }
    static PairwiseProperty t_intersecting(int t) { return {t, 0}; }
    static PairwiseProperty iu() { return {1, 1}; }
    static PairwiseProperty ts(int t, int s) { return {t, s}; }
};

struct SearchReport {
    std::size_t optimum = 0;
    Family witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kMaxSearchFamily = 32;

// Largest subfamily of D whose members pairwise (including each with itself)
// satisfy the property. Exact branch-and-bound with colouring bounds; |D| <= 32.
SearchReport max_subfamily(const Family& d, PairwiseProperty property);

struct MTableEntry {
    int n = 0;
    int t = 0;
    int s = 0;  // 0 for m(n,t)
    std::size_t value = 0;
};

class MTable {
public:
    void add(MTableEntry e) { entries_.push_back(e); }
    const std::vector<MTableEntry>& entries() const { return entries_; }
    // m(n,t) with s = 0, m(n,t,s) otherwise; throws if not tabulated.
    std::size_t value(int n, int t, int s = 0) const;
    bool has(int n, int t, int s = 0) const;

private:
    std::vector<MTableEntry> entries_;
};

inline constexpr int kMaxTableGround = 5;

// m(n,t) and m(n,t,s) for 1 <= n <= n_max, 1 <= t <= t_max, 1 <= s <= s_max.
MTable m_table(int n_max, int t_max, int s_max);

}  // namespace setmatch
