#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "setmatch/family.hpp"
#include "setmatch/weight_fn.hpp"

namespace setmatch {

// Sparse p : 2^[n] x 2^[n] -> N; only positive entries are stored.
class WeightedMatching {
public:
    using Key = std::pair<SetMask, SetMask>;

    WeightedMatching() = default;
    explicit WeightedMatching(int n) : n_(n) {}

    int n() const { return n_; }
    void add(SetMask x, SetMask y, std::uint64_t weight);
    std::uint64_t at(SetMask x, SetMask y) const;
    std::uint64_t total() const;
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }

    std::uint64_t row_sum(SetMask x) const;
    std::uint64_t column_sum(SetMask y) const;

    friend bool operator==(const WeightedMatching&, const WeightedMatching&) = default;

private:
    int n_ = 0;
    std::map<Key, std::uint64_t> entries_;
};

// Unordered pairs of disjoint sets, no set used twice.
struct PairMatching {
    int n = 0;
    std::vector<std::pair<SetMask, SetMask>> pairs;

    friend bool operator==(const PairMatching&, const PairMatching&) = default;
};

// Injective phi : F -> G with A and phi(A) disjoint.
struct Injection {
    int n = 0;
    std::map<SetMask, SetMask> image;

    friend bool operator==(const Injection&, const Injection&) = default;
};

// Lowers g pointwise, keeping it monotone, until |g| = |f|. Sets are visited
// from the top mask down; each is lowered as far as its already-final
// supersets allow.
WeightFn normalize_g(const WeightFn& f, const WeightFn& g);

// Weighted matching of f into g between disjoint sets: row sums equal f,
// column sums at most g. Built by splitting off element 1, recursing on the
// merged functions, and orienting the resulting multigraph by quotas.
WeightedMatching weighted_disjoint_matching(const WeightFn& f, const WeightFn& g);

// Matching of the down-set F into the down-set G (|F| <= |G|), read off the
// weighted matching of their characteristic functions.
Injection matched_into(const Family& f, const Family& g);

struct TwoColoring {
    std::map<SetMask, int> color;      // 0 or 1
    std::map<SetMask, int> component;  // component index, in order of smallest vertex
};

// Proper 2-colouring of the union of two matchings. Each component's
// smallest vertex gets colour 0.
TwoColoring two_coloring(const PairMatching& m1, const PairMatching& m2);

// Partition of A (or A without the empty set, when |A| is odd) into disjoint
// pairs, built by induction on the largest element.
PairMatching self_matching(const Family& a);

struct Verdict {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// Re-checks disjoint support, row sums = f, column sums <= g and |p| = |f|.
Verdict verify_weighted_matching(const WeightedMatching& p, const WeightFn& f, const WeightFn& g);
// Re-checks the self-matching dichotomy: pairs are disjoint members of A,
// no set repeats, and everything but possibly the empty set is covered.
Verdict verify_pair_matching(const PairMatching& m, const Family& a);
// Re-checks that phi covers F, lands in G, is injective, and pairs disjoint sets.
Verdict verify_injection(const Injection& phi, const Family& f, const Family& g);

}  // namespace setmatch
