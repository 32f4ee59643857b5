#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setmatch/family.hpp"

namespace setmatch {

enum class Status { verified, counterexample, conjecture_consistent };

std::string to_string(Status s);

// Exact non-negative rational; all ratios here are cardinalities over 2^n.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend Ratio operator*(Ratio a, Ratio b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator<=(Ratio a, Ratio b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator==(Ratio a, Ratio b) { return a.num * b.den == b.num * a.den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Densities of A, B and their up/down closures, for the product bound on
// cross-IU pairs.
struct RatioTrace {
    Ratio alpha, beta, alpha_up, alpha_down, beta_up, beta_down;

    static RatioTrace of(const Family& a, const Family& b);

    // alpha <= alpha_up * alpha_down and beta <= beta_up * beta_down.
    bool correlation_holds() const;
    // alpha * beta <= (alpha_up beta_up)(alpha_down beta_down) <= 1/16 with
    // both bracketed products at most 1/4.
    bool chain_holds() const;
};

struct Witness {
    std::vector<Family> families;
    std::string note;
    std::optional<RatioTrace> ratios;
};

struct CheckReport {
    std::string claim_id;
    std::uint64_t instance_count = 0;
    std::int64_t bound = 0;
    std::int64_t achieved = 0;
    Status status = Status::verified;
    std::optional<Witness> witness;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> notes;
    std::vector<CheckReport> parts;

    bool passed() const { return status != Status::counterexample; }
    void fail(std::string note, std::vector<Family> families);
    // Folds a sub-report in: counts add up, the first counterexample wins,
    // and a conjecture part keeps the parent from claiming "verified".
    void absorb(CheckReport part);
};

inline constexpr std::uint64_t kDefaultSamples = 100000;

// Intersecting families in 2^[n] have at most 2^(n-1) members, attained.
// 1 <= n <= 4.
CheckReport check_ekr(int n);

// 2^n |A & B| <= |A||B| for every up-set A and down-set B. n <= 4.
CheckReport check_harris_kleitman(int n);

// |F| + |G| <= max(|F down|, |G down|) for cross-intersecting F, G. n <= 3
// scans every pair; n = 4 checks every pair of closure classes through the
// bipartite disjointness graph and samples pairs directly.
CheckReport check_crossiu_sum(int n, std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0);

enum class ChvatalMode { full, tau2 };

// full: the largest intersecting subfamily of D has at most Delta(D) members.
// tau2: every intersecting F in D with covering number 2 is split along each
// 2-cover and the split is checked piece by piece.
CheckReport check_chvatal(const Family& d, ChvatalMode mode);
CheckReport check_chvatal_all(int n, ChvatalMode mode);

// Largest IU family is 2^(n-2); largest cross-IU product is 2^(2n-4). n <= 4.
CheckReport check_iu_bounds(int n);

// Sum bound for pairwise cross-IU families, plus |A| + 3|B| <= 2^n when d = 2.
CheckReport check_hilton_sum(const std::vector<Family>& families);
// x + d/x <= 1 + d on a rational grid with 1 <= x <= d.
CheckReport check_ratio_lemma(int d_max = 12, int denominator_max = 12);
// Exhaustive for n <= 3 and every d <= 3, sampled otherwise. Sampled tuples
// take their d from `ds` round-robin.
CheckReport scan_hilton(int n, const std::vector<int>& ds, std::uint64_t samples = kDefaultSamples,
                        std::uint64_t seed = 0);
// The two documented equality configurations at ground size n.
CheckReport check_hilton_equality(int n);

// Every down-set at ground size n (<= 5) pairs up with itself.
CheckReport check_self_matching_theorem(int n);

// Every ordered down-set pair with |F| <= |G| at n <= 4; random pairs at n = 5.
CheckReport check_two_family_matching(int n, std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0);

// m-table relations up to n_max (<= 5). The two inequalities are checked as
// theorems; the two conjectures are only ever reported consistent or refuted.
CheckReport scan_ts_conjectures(int n_max);

// Dispatch by claim id for the CLI: ekr, harris-kleitman, crossiu-sum,
// chvatal, iu-bounds, hilton, self-matching, two-family-matching,
// ts-conjectures.
struct CheckOptions {
    int n = 3;
    std::vector<int> ds;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = 0;
};
CheckReport run_check(const std::string& claim_id, const CheckOptions& options);
std::vector<std::string> claim_ids();

}  // namespace setmatch
