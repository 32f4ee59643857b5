#include "setmatch/theorem_lab.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "lab_internal.hpp"
#include "setmatch/matching.hpp"
#include "setmatch/oracles.hpp"
#include "setmatch/small_family.hpp"

namespace setmatch {

using detail::pow2;
using detail::require_range;

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::counterexample: return "counterexample";
        case Status::conjecture_consistent: return "conjecture-consistent";
    }
    return "unknown";
}

RatioTrace RatioTrace::of(const Family& a, const Family& b) {
    if (a.n() != b.n()) throw Error("ambient size mismatch");
    const auto den = static_cast<std::uint64_t>(pow2(a.n()));
    auto r = [den](std::size_t k) { return Ratio{k, den}; };
    return {r(a.size()), r(b.size()), r(up_closure(a).size()), r(down_closure(a).size()),
            r(up_closure(b).size()), r(down_closure(b).size())};
}

bool RatioTrace::correlation_holds() const {
    return alpha <= alpha_up * alpha_down && beta <= beta_up * beta_down;
}

bool RatioTrace::chain_holds() const {
    const Ratio quarter{1, 4};
    const Ratio up = alpha_up * beta_up;
    const Ratio down = alpha_down * beta_down;
    return correlation_holds() && up <= quarter && down <= quarter && alpha * beta <= up * down &&
           up * down <= Ratio{1, 16};
}

void CheckReport::fail(std::string note, std::vector<Family> families) {
    if (status == Status::counterexample) return;
    status = Status::counterexample;
    witness = Witness{std::move(families), std::move(note), std::nullopt};
}

void CheckReport::absorb(CheckReport part) {
    instance_count += part.instance_count;
    if (part.status == Status::counterexample && status != Status::counterexample) {
        status = Status::counterexample;
        witness = part.witness;
    } else if (part.status == Status::conjecture_consistent && status == Status::verified) {
        status = Status::conjecture_consistent;
    }
    parts.push_back(std::move(part));
}

CheckReport check_ekr(int n) {
    require_range("n", n, 1, 4);
    CheckReport report{.claim_id = "ekr"};
    const SearchReport best = max_subfamily(Family::power_set(n), PairwiseProperty::intersecting());
    report.bound = pow2(n - 1);
    report.achieved = static_cast<std::int64_t>(best.optimum);
    report.instance_count = best.nodes_explored;
    if (!is_intersecting(best.witness) || best.witness.size() != best.optimum) {
        report.fail("oracle witness is not an intersecting family of the reported size", {best.witness});
    } else if (report.achieved > report.bound) {
        report.fail("intersecting family larger than 2^(n-1)", {best.witness});
    } else if (report.achieved < report.bound) {
        report.fail("no intersecting family attains 2^(n-1)", {best.witness});
    } else {
        report.witness = Witness{{best.witness}, "extremal intersecting family", std::nullopt};
    }
    return report;
}

CheckReport check_harris_kleitman(int n) {
    require_range("n", n, 0, 4);
    CheckReport report{.claim_id = "harris-kleitman"};
    const auto downs = down_set_words(n);
    const std::int64_t cube = pow2(n);
    report.bound = 0;
    report.achieved = std::numeric_limits<std::int64_t>::min();
    std::uint64_t equalities = 0;
    for (FamilyWord d : downs) {
        const FamilyWord up = complement_word(n, d);
        for (FamilyWord down : downs) {
            const std::int64_t lhs = cube * word_size(up & down);
            const std::int64_t rhs = std::int64_t{word_size(up)} * word_size(down);
            ++report.instance_count;
            report.achieved = std::max(report.achieved, lhs - rhs);
            if (lhs == rhs) ++equalities;
            if (lhs > rhs) {
                report.fail("2^n |A & B| > |A||B|", {from_word(n, up), from_word(n, down)});
            }
        }
    }
    report.notes.push_back(std::to_string(equalities) + " pairs attain equality");
    return report;
}

namespace {

struct CrossSumTally {
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    std::uint64_t replays = 0;
};

// Replays the matching argument on one cross-intersecting pair: match the
// smaller closure into the larger one; each matched pair holds at most one
// member of F or G, so |F| + |G| is at most the larger closure.
class CrossSumReplay {
public:
    explicit CrossSumReplay(int n) : n_(n) {}

    bool check(FamilyWord f, FamilyWord g, std::string& why) {
        FamilyWord fd = down_closure_word(n_, f);
        FamilyWord gd = down_closure_word(n_, g);
        bool swapped = word_size(fd) > word_size(gd);
        if (swapped) {
            std::swap(fd, gd);
            std::swap(f, g);
        }
        const Injection& phi = cached(fd, gd);
        std::int64_t used_pairs = 0;
        for (const auto& [x, y] : phi.image) {
            const bool in_small = (f >> x) & 1U;
            const bool in_large = (g >> y) & 1U;
            if (in_small && in_large) {
                why = "matched disjoint pair " + format_set(x) + "," + format_set(y) + " lies in both families";
                return false;
            }
            if (in_small || in_large) ++used_pairs;
        }
        const std::int64_t unmatched_large = word_size(gd) - static_cast<std::int64_t>(phi.image.size());
        if (word_size(f) + word_size(g) > used_pairs + unmatched_large) {
            why = "pair count does not cover |F| + |G|";
            return false;
        }
        return true;
    }

private:
    const Injection& cached(FamilyWord small, FamilyWord large) {
        auto key = std::make_pair(small, large);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            Injection phi = matched_into(from_word(n_, small), from_word(n_, large));
            it = cache_.emplace(key, std::move(phi)).first;
        }
        return it->second;
    }

    int n_;
    std::map<std::pair<FamilyWord, FamilyWord>, Injection> cache_;
};

void check_cross_pair(int n, FamilyWord f, FamilyWord g, CheckReport& part, CrossSumReplay& replay) {
    const int lhs = word_size(f) + word_size(g);
    const int rhs = std::max(word_size(down_closure_word(n, f)), word_size(down_closure_word(n, g)));
    ++part.instance_count;
    part.achieved = std::max<std::int64_t>(part.achieved, lhs - rhs);
    if (lhs > rhs) part.fail("|F| + |G| exceeds the larger down-closure", {from_word(n, f), from_word(n, g)});
    std::string why;
    if (!replay.check(f, g, why)) part.fail("matching replay failed: " + why, {from_word(n, f), from_word(n, g)});
}

}  // namespace

CheckReport check_crossiu_sum(int n, std::uint64_t samples, std::uint64_t seed) {
    require_range("n", n, 1, 4);
    CheckReport report{.claim_id = "crossiu-sum"};
    report.bound = 0;
    report.achieved = std::numeric_limits<std::int64_t>::min();
    const PartnerTable meets(n, 1, 0);
    CrossSumReplay replay(n);

    // Every cross-intersecting pair lives inside its pair of down-closures,
    // and the largest such pair inside (D1, D2) is an independent set of
    // KG(D1, D2).
    CheckReport classes{.claim_id = "crossiu-sum/closure-classes", .bound = 0};
    classes.achieved = std::numeric_limits<std::int64_t>::min();
    const auto downs = down_set_words(n);
    for (FamilyWord d1 : downs) {
        for (FamilyWord d2 : downs) {
            const Family f = from_word(n, d1);
            const Family g = from_word(n, d2);
            const auto nu = max_bipartite_matching(kneser_bipartite(f, g)).size;
            const auto independent = static_cast<std::int64_t>(f.size() + g.size() - nu);
            const auto cap = static_cast<std::int64_t>(std::max(f.size(), g.size()));
            ++classes.instance_count;
            classes.achieved = std::max(classes.achieved, independent - cap);
            if (independent > cap) classes.fail("independent set of KG(D1,D2) exceeds max(|D1|,|D2|)", {f, g});
        }
    }

    CheckReport direct{.claim_id = n <= 3 ? "crossiu-sum/exhaustive" : "crossiu-sum/sampled", .bound = 0};
    direct.achieved = std::numeric_limits<std::int64_t>::min();
    const FamilyWord universe = universe_word(n);
    if (n <= 3) {
        for (FamilyWord f = 0;; ++f) {
            const FamilyWord allowed = meets.common_partners(f);
            // every G inside `allowed`, via submask enumeration
            for (FamilyWord g = allowed;; g = (g - 1) & allowed) {
                check_cross_pair(n, f, g, direct, replay);
                if (g == 0) break;
            }
            if (f == universe) break;
        }
    } else {
        direct.seed = seed;
        detail::Rng rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            // Thin random words so that the partner set stays non-trivial.
            FamilyWord f = rng.bits() & rng.bits() & universe;
            if (i % 2 == 0) f &= rng.bits();
            const FamilyWord allowed = meets.common_partners(f);
            const FamilyWord g = allowed & (rng.bits() | rng.bits());
            check_cross_pair(n, f, g, direct, replay);
        }
    }
    report.achieved = std::max(classes.achieved, direct.achieved);
    report.seed = direct.seed;
    report.absorb(std::move(classes));
    report.absorb(std::move(direct));
    return report;
}

namespace {

SetMask common_elements(const std::vector<SetMask>& members, int n) {
    SetMask acc = full_mask(n);
    for (SetMask s : members) acc &= s;
    return acc;
}

bool covers(SetMask cover, const std::vector<SetMask>& members) {
    return std::all_of(members.begin(), members.end(), [cover](SetMask s) { return (s & cover) != 0; });
}

// Splits F and D along the cover {x, y} and checks each step of the
// covering-number-2 argument.
void check_split(const Family& d, const std::vector<SetMask>& members, int x, int y, CheckReport& report) {
    const int n = d.n();
    const SetMask bx = element_bit(x);
    const SetMask by = element_bit(y);
    const SetMask both = bx | by;
    auto split = [&](auto&& range) {
        std::vector<SetMask> only_x, only_y, with_both;
        for (SetMask s : range) {
            const SetMask hit = s & both;
            if (hit == bx) only_x.push_back(s & ~bx);
            if (hit == by) only_y.push_back(s & ~by);
            if (hit == both) with_both.push_back(s & ~both);
        }
        return std::array<Family, 3>{Family(n, std::move(only_x)), Family(n, std::move(only_y)),
                                     Family(n, std::move(with_both))};
    };
    const Family f_family(n, members);
    const auto [fx, fy, fxy] = split(members);
    const auto [gx, gy, gxy] = split(d);
    ++report.instance_count;

    auto fail = [&](const std::string& what) {
        report.fail(what + " (cover {" + std::to_string(x) + "," + std::to_string(y) + "})",
                    {d, f_family, fx, fy});
    };
    if (fx.size() + fy.size() + fxy.size() != members.size()) return fail("|F| != |F_x| + |F_y| + |F_xy|");
    const std::size_t deg_x = link_and_deletion(d, x).link.size();
    const std::size_t deg_y = link_and_deletion(d, y).link.size();
    if (deg_x != gx.size() + gxy.size() || deg_y != gy.size() + gxy.size()) {
        return fail("degree split |D(x)| = |G_x| + |G_xy| fails");
    }
    if (!fxy.subset_of(gxy) || !fx.subset_of(gx) || !fy.subset_of(gy)) return fail("split not contained in D's split");
    if (!is_down_set(gx) || !is_down_set(gy)) return fail("G_x or G_y is not a down-set");
    if (!is_cross_intersecting(fx, fy)) return fail("F_x, F_y not cross-intersecting");
    const std::size_t closure_max = std::max(down_closure(fx).size(), down_closure(fy).size());
    const std::size_t g_max = std::max(gx.size(), gy.size());
    if (fx.size() + fy.size() > closure_max) return fail("|F_x| + |F_y| exceeds max closure");
    if (closure_max > g_max) return fail("closure of F_x or F_y exceeds G_x, G_y");
    const auto slack = static_cast<std::int64_t>(fx.size() + fy.size()) - static_cast<std::int64_t>(g_max);
    report.achieved = std::max(report.achieved, slack);
    if (slack > 0) return fail("|F_x| + |F_y| > max(|G_x|, |G_y|)");
    if (members.size() > max_degree(d)) return fail("|F| > Delta(D)");
}

}  // namespace

CheckReport check_chvatal(const Family& d, ChvatalMode mode) {
    if (!is_down_set(d)) throw Error("check_chvatal needs a down-set");
    const int n = d.n();
    if (mode == ChvatalMode::full) {
        CheckReport report{.claim_id = "chvatal/full"};
        const SearchReport best = max_subfamily(d, PairwiseProperty::intersecting());
        report.instance_count = 1;
        report.bound = static_cast<std::int64_t>(max_degree(d));
        report.achieved = static_cast<std::int64_t>(best.optimum);
        if (!is_intersecting(best.witness)) {
            report.fail("oracle witness is not intersecting", {d, best.witness});
        } else if (report.achieved > report.bound) {
            report.fail("intersecting subfamily larger than Delta(D)", {d, best.witness});
        }
        return report;
    }

    if (d.size() > 24) throw Error("tau2 mode enumerates intersecting subfamilies; |D| <= 24");
    CheckReport report{.claim_id = "chvatal/tau2", .bound = 0};
    report.achieved = std::numeric_limits<std::int64_t>::min();
    std::vector<SetMask> vertices;
    for (SetMask s : d) {
        if (s != 0) vertices.push_back(s);
    }
    std::vector<std::uint32_t> adj(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if ((vertices[i] & vertices[j]) != 0) adj[i] |= 1U << j;
        }
    }
    std::vector<SetMask> current;
    // Every intersecting subfamily, each generated once by increasing index.
    auto visit = [&](auto&& self, std::uint32_t candidates) -> void {
        if (!current.empty() && common_elements(current, n) == 0) {
            for (int x = 1; x <= n; ++x) {
                for (int y = x + 1; y <= n; ++y) {
                    if (covers(element_bit(x) | element_bit(y), current)) check_split(d, current, x, y, report);
                }
            }
        }
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            current.push_back(vertices[v]);
            self(self, candidates & adj[v]);
            current.pop_back();
        }
    };
    visit(visit, vertices.empty() ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << vertices.size()) - 1));
    if (report.instance_count == 0) report.achieved = 0;
    return report;
}

CheckReport check_chvatal_all(int n, ChvatalMode mode) {
    require_range("n", n, 0, mode == ChvatalMode::full ? 5 : 4);
    CheckReport report{.claim_id = mode == ChvatalMode::full ? "chvatal/full" : "chvatal/tau2"};
    report.bound = 0;
    report.achieved = std::numeric_limits<std::int64_t>::min();
    std::uint64_t down_sets = 0, failures = 0;
    for_each_down_set(n, [&](const Family& d) {
        ++down_sets;
        CheckReport one = check_chvatal(d, mode);
        const std::int64_t slack = mode == ChvatalMode::full ? one.achieved - one.bound : one.achieved;
        report.achieved = std::max(report.achieved, slack);
        report.instance_count += one.instance_count;
        if (!one.passed()) ++failures;
        if (!one.passed() && report.passed()) {
            report.status = Status::counterexample;
            report.witness = one.witness;
        }
    });
    report.notes.push_back(std::to_string(down_sets) + " down-sets, " + std::to_string(failures) + " counterexamples");
    return report;
}

CheckReport check_iu_bounds(int n) {
    require_range("n", n, 0, 4);
    CheckReport report{.claim_id = "iu-bounds"};
    if (n < 2) {
        report.notes.push_back("n < 2: no non-empty IU family; bound degenerate");
        return report;
    }

    CheckReport single{.claim_id = "iu-bounds/single"};
    const SearchReport best = max_subfamily(Family::power_set(n), PairwiseProperty::iu());
    single.bound = pow2(n - 2);
    single.achieved = static_cast<std::int64_t>(best.optimum);
    single.instance_count = best.nodes_explored;
    if (!is_iu(best.witness)) {
        single.fail("oracle witness is not IU", {best.witness});
    } else if (single.achieved != single.bound) {
        single.fail("largest IU family differs from 2^(n-2)", {best.witness});
    } else {
        single.witness = Witness{{best.witness}, "extremal IU family", std::nullopt};
    }

    // For fixed A the best partner is every set cross-IU with all of A, so
    // scanning A alone is exhaustive over pairs.
    CheckReport product{.claim_id = "iu-bounds/product"};
    product.bound = pow2(2 * n - 4);
    const PartnerTable table(n, 1, 1);
    const FamilyWord universe = universe_word(n);
    FamilyWord best_a = 0, best_b = 0;
    for (FamilyWord a = 0;; ++a) {
        const FamilyWord b = table.common_partners(a);
        const std::int64_t value = std::int64_t{word_size(a)} * word_size(b);
        ++product.instance_count;
        if (value > product.achieved) {
            product.achieved = value;
            best_a = a;
            best_b = b;
        }
        if (a == universe) break;
    }
    const Family wa = from_word(n, best_a);
    const Family wb = from_word(n, best_b);
    const RatioTrace trace = RatioTrace::of(wa, wb);
    if (!is_cross_iu(wa, wb)) {
        product.fail("maximising pair is not cross-IU", {wa, wb});
    } else if (product.achieved != product.bound) {
        product.fail("largest cross-IU product differs from 2^(2n-4)", {wa, wb});
    } else if (!trace.chain_holds()) {
        product.fail("density chain alpha*beta <= (a_up b_up)(a_down b_down) <= 1/16 fails", {wa, wb});
    }
    if (product.passed()) product.witness = Witness{{wa, wb}, "extremal cross-IU pair", trace};

    report.bound = single.bound;
    report.achieved = single.achieved;
    report.absorb(std::move(single));
    report.absorb(std::move(product));
    return report;
}

}  // namespace setmatch
