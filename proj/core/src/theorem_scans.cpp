#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "lab_internal.hpp"
#include "setmatch/matching.hpp"
#include "setmatch/oracles.hpp"
#include "setmatch/small_family.hpp"
#include "setmatch/theorem_lab.hpp"

namespace setmatch {

using detail::pow2;
using detail::require_range;

namespace {

// max(2^n, d 2^(n-2)), rounded down; sums are integers so this is exact.
std::int64_t hilton_bound(int n, int d) { return std::max(pow2(n), (d * pow2(n)) / 4); }

}  // namespace

CheckReport check_hilton_sum(const std::vector<Family>& families) {
    const int d = static_cast<int>(families.size());
    if (d < 2) throw Error("check_hilton_sum needs d >= 2 families");
    const int n = families.front().n();
    for (const auto& f : families) {
        if (f.n() != n) throw Error("families over different ground sizes");
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (!is_cross_iu(families[i], families[j])) {
                throw Error("families " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " are not cross-IU");
            }
        }
    }
    CheckReport report{.claim_id = "hilton/sum", .instance_count = 1};
    report.bound = hilton_bound(n, d);
    for (const auto& f : families) report.achieved += static_cast<std::int64_t>(f.size());
    if (report.achieved > report.bound) report.fail("sum exceeds max(2^n, d 2^(n-2))", families);
    if (d == 2) {
        const auto [small, large] = std::minmax({families[0].size(), families[1].size()});
        const auto weighted = static_cast<std::int64_t>(large + 3 * small);
        if (weighted > pow2(n)) report.fail("|A| + 3|B| > 2^n with |A| >= |B|", families);
    }
    if (report.passed() && report.achieved == report.bound) {
        std::string sizes;
        for (const auto& f : families) sizes += (sizes.empty() ? "" : ",") + std::to_string(f.size());
        report.notes.push_back("equality attained, sizes " + sizes);
    }
    return report;
}

CheckReport check_ratio_lemma(int d_max, int denominator_max) {
    CheckReport report{.claim_id = "hilton/ratio-lemma"};
    report.bound = 0;
    report.achieved = std::numeric_limits<std::int64_t>::min();
    // x = a/q with 1 <= x <= d: (a/q) + d q/a <= 1 + d  <=>  a^2 + d q^2 <= (1 + d) a q.
    for (std::int64_t d = 1; d <= d_max; ++d) {
        for (std::int64_t q = 1; q <= denominator_max; ++q) {
            for (std::int64_t a = q; a <= d * q; ++a) {
                const std::int64_t slack = a * a + d * q * q - (1 + d) * a * q;
                ++report.instance_count;
                report.achieved = std::max(report.achieved, slack);
                if (slack > 0) {
                    report.fail("x + d/x > 1 + d at x = " + std::to_string(a) + "/" + std::to_string(q) +
                                    ", d = " + std::to_string(d),
                                {});
                }
            }
        }
    }
    return report;
}

namespace {

struct HiltonTally {
    CheckReport sum{.claim_id = "hilton/sum"};
    CheckReport pair{.claim_id = "hilton/two-families"};
};

void tally_tuple(int n, const std::vector<FamilyWord>& tuple, HiltonTally& t) {
    const int d = static_cast<int>(tuple.size());
    std::int64_t sum = 0;
    for (FamilyWord w : tuple) sum += word_size(w);
    const std::int64_t slack = sum - hilton_bound(n, d);
    ++t.sum.instance_count;
    t.sum.achieved = std::max(t.sum.achieved, slack);
    auto families = [&] {
        std::vector<Family> out;
        for (FamilyWord w : tuple) out.push_back(from_word(n, w));
        return out;
    };
    if (slack > 0) t.sum.fail("sum exceeds max(2^n, d 2^(n-2))", families());
    if (d == 2) {
        const int big = std::max(word_size(tuple[0]), word_size(tuple[1]));
        const int small = std::min(word_size(tuple[0]), word_size(tuple[1]));
        const std::int64_t pair_slack = big + 3 * small - pow2(n);
        ++t.pair.instance_count;
        t.pair.achieved = std::max(t.pair.achieved, pair_slack);
        if (pair_slack > 0) t.pair.fail("|A| + 3|B| > 2^n with |A| >= |B|", families());
    }
}

}  // namespace

CheckReport scan_hilton(int n, const std::vector<int>& ds, std::uint64_t samples, std::uint64_t seed) {
    require_range("n", n, 2, 4);
    if (ds.empty()) throw Error("scan_hilton needs at least one d");
    for (int d : ds) require_range("d", d, 2, 16);
    const PartnerTable table(n, 1, 1);
    const FamilyWord universe = universe_word(n);
    HiltonTally tally;
    tally.sum.achieved = tally.pair.achieved = std::numeric_limits<std::int64_t>::min();

    const bool exhaustive = n <= 3 && *std::max_element(ds.begin(), ds.end()) <= 3;
    CheckReport report{.claim_id = "hilton"};
    report.bound = 0;
    if (exhaustive) {
        // All tuples whose last family is the full common partner set; any
        // other completion has a smaller sum.
        std::vector<FamilyWord> tuple;
        for (int d : ds) {
            std::function<void(FamilyWord)> extend = [&](FamilyWord allowed) {
                if (static_cast<int>(tuple.size()) == d - 1) {
                    tuple.push_back(allowed);
                    tally_tuple(n, tuple, tally);
                    tuple.pop_back();
                    return;
                }
                for (FamilyWord a = allowed;; a = (a - 1) & allowed) {
                    tuple.push_back(a);
                    extend(allowed & table.common_partners(a));
                    tuple.pop_back();
                    if (a == 0) break;
                }
            };
            extend(universe);
        }
        report.notes.push_back("exhaustive over tuples with a maximal last family");
    } else {
        detail::Rng rng(seed);
        report.seed = seed;
        std::vector<FamilyWord> tuple;
        for (std::uint64_t i = 0; i < samples; ++i) {
            const int d = ds[i % ds.size()];
            tuple.clear();
            FamilyWord allowed = universe;
            for (int k = 0; k < d; ++k) {
                FamilyWord a = 0;
                switch (rng.below(4)) {
                    case 0: a = allowed; break;
                    case 1: a = allowed & rng.bits(); break;
                    case 2: a = allowed & (rng.bits() | rng.bits()); break;
                    default: a = allowed & rng.bits() & rng.bits(); break;
                }
                tuple.push_back(a);
                allowed &= table.common_partners(a);
            }
            // The shuffle-free construction favours early families; rotate.
            std::rotate(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i % tuple.size()), tuple.end());
            tally_tuple(n, tuple, tally);
        }
    }
    report.achieved = tally.sum.achieved;
    report.absorb(std::move(tally.sum));
    if (tally.pair.instance_count > 0) report.absorb(std::move(tally.pair));
    report.absorb(check_ratio_lemma());
    return report;
}

CheckReport check_hilton_equality(int n) {
    require_range("n", n, 2, 4);
    CheckReport report{.claim_id = "hilton/equality"};
    const SearchReport iu = max_subfamily(Family::power_set(n), PairwiseProperty::iu());
    {
        CheckReport equal = check_hilton_sum(std::vector<Family>(5, iu.witness));
        equal.claim_id = "hilton/equality/d=5-equal-iu";
        if (equal.passed() && equal.achieved != equal.bound) {
            equal.fail("five copies of an extremal IU family miss the bound", {iu.witness});
        }
        report.absorb(std::move(equal));
    }
    for (int d = 2; d <= 4; ++d) {
        std::vector<Family> families(static_cast<std::size_t>(d), Family(n));
        families[0] = Family::power_set(n);
        CheckReport cube = check_hilton_sum(families);
        cube.claim_id = "hilton/equality/d=" + std::to_string(d) + "-cube";
        if (cube.passed() && cube.achieved != cube.bound) cube.fail("cube plus empty families miss the bound", families);
        report.absorb(std::move(cube));
    }
    report.bound = report.achieved = 0;
    return report;
}

CheckReport check_self_matching_theorem(int n) {
    require_range("n", n, 0, 5);
    CheckReport report{.claim_id = "self-matching"};
    std::uint64_t even = 0, odd = 0;
    for_each_down_set(n, [&](const Family& a) {
        ++report.instance_count;
        (a.size() % 2 == 0 ? even : odd) += 1;
        const PairMatching m = self_matching(a);
        const Verdict v = verify_pair_matching(m, a);
        if (!v) report.fail(v.violation, {a});
        report.achieved = std::max<std::int64_t>(report.achieved, static_cast<std::int64_t>(2 * m.pairs.size()));
    });
    report.bound = report.achieved;
    report.notes.push_back(std::to_string(even) + " even down-sets, " + std::to_string(odd) + " odd");
    return report;
}

namespace {

void check_one_pair(const Family& f, const Family& g, CheckReport& report) {
    ++report.instance_count;
    const Injection phi = matched_into(f, g);
    const Verdict v = verify_injection(phi, f, g);
    if (!v) return report.fail(v.violation, {f, g});
    const auto nu = max_bipartite_matching(kneser_bipartite(f, g)).size;
    if (nu != f.size()) report.fail("oracle matching size " + std::to_string(nu) + " != |F|", {f, g});
}

}  // namespace

CheckReport check_two_family_matching(int n, std::uint64_t samples, std::uint64_t seed) {
    require_range("n", n, 0, 5);
    CheckReport report{.claim_id = "two-family-matching"};
    const auto words = down_set_words(n);
    std::vector<Family> families;
    families.reserve(words.size());
    for (FamilyWord w : words) families.push_back(from_word(n, w));
    if (n <= 4) {
        for (const auto& f : families) {
            for (const auto& g : families) {
                if (f.size() <= g.size()) check_one_pair(f, g, report);
            }
        }
    } else {
        report.seed = seed;
        detail::Rng rng(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            const Family* f = &families[rng.below(families.size())];
            const Family* g = &families[rng.below(families.size())];
            if (f->size() > g->size()) std::swap(f, g);
            check_one_pair(*f, *g, report);
        }
    }
    report.bound = report.achieved = 0;
    return report;
}

namespace {

// max |F||G| over cross-(t,s) pairs: for fixed F the best G is every set
// compatible with all of F.
std::pair<std::int64_t, std::pair<FamilyWord, FamilyWord>> max_cross_product(int n, int t, int s) {
    const PartnerTable table(n, t, s);
    const FamilyWord universe = universe_word(n);
    std::int64_t best = 0;
    std::pair<FamilyWord, FamilyWord> arg{0, universe};
    for (FamilyWord f = 0;; ++f) {
        const FamilyWord g = table.common_partners(f);
        const std::int64_t value = std::int64_t{word_size(f)} * word_size(g);
        if (value > best) {
            best = value;
            arg = {f, g};
        }
        if (f == universe) break;
    }
    return {best, arg};
}

}  // namespace

CheckReport scan_ts_conjectures(int n_max) {
    require_range("n_max", n_max, 1, kMaxTableGround);
    const MTable table = m_table(n_max, n_max, n_max);
    auto m = [&](int n, int t, int s = 0) { return static_cast<std::int64_t>(table.value(n, t, s)); };

    CheckReport monotone{.claim_id = "ts/extra-element", .bound = 0};
    monotone.achieved = std::numeric_limits<std::int64_t>::min();
    for (int n = 1; n + 1 <= n_max; ++n) {
        for (int t = 1; t <= n; ++t) {
            const std::int64_t gap = m(n, t) - m(n + 1, t, 1);
            ++monotone.instance_count;
            monotone.achieved = std::max(monotone.achieved, gap);
            if (gap > 0) {
                monotone.fail("m(" + std::to_string(n + 1) + "," + std::to_string(t) + ",1) < m(" +
                                  std::to_string(n) + "," + std::to_string(t) + ")",
                              {});
            }
        }
    }

    CheckReport product{.claim_id = "ts/product", .bound = 0};
    product.achieved = std::numeric_limits<std::int64_t>::min();
    for (int n = 1; n < n_max; ++n) {
        for (int n2 = 1; n + n2 <= n_max; ++n2) {
            for (int t = 1; t <= n; ++t) {
                for (int s = 1; s <= n2; ++s) {
                    const std::int64_t gap = m(n, t) * m(n2, s) - m(n + n2, t, s);
                    ++product.instance_count;
                    product.achieved = std::max(product.achieved, gap);
                    if (gap > 0) {
                        product.fail("m(n+n',t,s) < m(n,t) m(n',s) at n=" + std::to_string(n) + ", n'=" +
                                         std::to_string(n2) + ", t=" + std::to_string(t) + ", s=" + std::to_string(s),
                                     {});
                    }
                }
            }
        }
    }

    CheckReport split{.claim_id = "ts/product-conjecture", .bound = 0};
    split.status = Status::conjecture_consistent;
    split.achieved = std::numeric_limits<std::int64_t>::min();
    for (int n = 2; n <= n_max; ++n) {
        for (int t = 1; t < n; ++t) {
            for (int s = 1; t + s <= n; ++s) {
                std::int64_t best = 0;
                for (int n1 = t; n1 <= n - s; ++n1) best = std::max(best, m(n1, t) * m(n - n1, s));
                const std::int64_t gap = m(n, t, s) - best;
                ++split.instance_count;
                split.achieved = std::max(split.achieved, gap);
                if (gap != 0) {
                    split.fail("m(n,t,s) != max m(n',t) m(n-n',s) at n=" + std::to_string(n) + ", t=" +
                                   std::to_string(t) + ", s=" + std::to_string(s),
                               {});
                }
            }
        }
    }

    CheckReport cross{.claim_id = "ts/cross-conjecture", .bound = 0};
    cross.status = Status::conjecture_consistent;
    cross.achieved = std::numeric_limits<std::int64_t>::min();
    for (int n = 2; n <= std::min(n_max, 4); ++n) {
        for (int t = 1; t < n; ++t) {
            for (int s = 1; t + s <= n; ++s) {
                const auto [best, arg] = max_cross_product(n, t, s);
                const std::int64_t gap = best - m(n, t, s) * m(n, t, s);
                ++cross.instance_count;
                cross.achieved = std::max(cross.achieved, gap);
                if (gap > 0) {
                    cross.fail("|F||G| > m(n,t,s)^2 at n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                                   ", s=" + std::to_string(s),
                               {from_word(n, arg.first), from_word(n, arg.second)});
                }
            }
        }
    }

    CheckReport report{.claim_id = "ts-conjectures"};
    report.bound = 0;
    report.achieved = std::max({monotone.achieved, product.achieved, split.achieved, cross.achieved});
    for (const auto& e : table.entries()) {
        if (e.t + e.s <= e.n || e.s == 0) {
            report.notes.push_back("m(" + std::to_string(e.n) + "," + std::to_string(e.t) +
                                   (e.s ? "," + std::to_string(e.s) : std::string{}) + ") = " + std::to_string(e.value));
        }
    }
    report.absorb(std::move(monotone));
    report.absorb(std::move(product));
    report.absorb(std::move(split));
    report.absorb(std::move(cross));
    return report;
}

std::vector<std::string> claim_ids() {
    return {"ekr", "harris-kleitman", "crossiu-sum", "chvatal", "iu-bounds",
            "hilton", "self-matching", "two-family-matching", "ts-conjectures"};
}

CheckReport run_check(const std::string& claim_id, const CheckOptions& o) {
    if (claim_id == "ekr") return check_ekr(o.n);
    if (claim_id == "harris-kleitman") return check_harris_kleitman(o.n);
    if (claim_id == "crossiu-sum") return check_crossiu_sum(o.n, o.samples, o.seed);
    if (claim_id == "chvatal") {
        CheckReport report{.claim_id = "chvatal"};
        CheckReport full = check_chvatal_all(o.n, ChvatalMode::full);
        report.notes = full.notes;
        report.bound = 0;
        report.achieved = full.achieved;
        report.absorb(std::move(full));
        if (o.n <= 4) report.absorb(check_chvatal_all(o.n, ChvatalMode::tau2));
        return report;
    }
    if (claim_id == "iu-bounds") return check_iu_bounds(o.n);
    if (claim_id == "hilton") {
        const std::vector<int> ds = o.ds.empty() ? std::vector<int>{2, 3, 4, 5, 6} : o.ds;
        CheckReport report = scan_hilton(o.n, ds, o.samples, o.seed);
        report.absorb(check_hilton_equality(o.n));
        return report;
    }
    if (claim_id == "self-matching") return check_self_matching_theorem(o.n);
    if (claim_id == "two-family-matching") return check_two_family_matching(o.n, o.samples, o.seed);
    if (claim_id == "ts-conjectures") return scan_ts_conjectures(o.n);
    throw Error("unknown claim id '" + claim_id + "'");
}

}  // namespace setmatch
