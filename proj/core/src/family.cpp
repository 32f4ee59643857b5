#include "setmatch/family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "setmatch/error.hpp"

namespace setmatch {

namespace {

void check_ground(int n) {
    if (n < 0 || n > kMaxGround) {
        throw Error("ground size " + std::to_string(n) + " outside [0," +
                    std::to_string(kMaxGround) + "]");
    }
}

void check_same_ground(const Family& a, const Family& b) {
    if (a.n() != b.n()) {
        throw Error("ambient size mismatch: n=" + std::to_string(a.n()) +
                    " vs n=" + std::to_string(b.n()));
    }
}

template <class Pred>
bool all_pairs(const Family& f, Pred pred) {
    auto m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!pred(m[i], m[j])) return false;
        }
    }
    return true;
}

template <class Pred>
bool all_cross_pairs(const Family& f, const Family& g, Pred pred) {
    check_same_ground(f, g);
    for (SetMask a : f) {
        for (SetMask b : g) {
            if (!pred(a, b)) return false;
        }
    }
    return true;
}

std::vector<bool> indicator_of(const Family& f) {
    std::vector<bool> ind(std::size_t{1} << f.n(), false);
    for (SetMask s : f) ind[s] = true;
    return ind;
}

}  // namespace

int popcount(SetMask s) { return std::popcount(s); }

SetMask make_set(std::initializer_list<int> elements) {
    SetMask s = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxGround) throw Error("element " + std::to_string(e) + " out of range");
        s |= element_bit(e);
    }
    return s;
}

std::string format_set(SetMask s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; s >> i; ++i) {
        if ((s >> i) & 1U) {
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

Family::Family(int n) : n_(n) {
    check_ground(n);
    build_index();
}

Family::Family(int n, std::vector<SetMask> members) : n_(n), members_(std::move(members)) {
    check_ground(n);
    const SetMask limit = full_mask(n);
    for (SetMask s : members_) {
        if ((s & ~limit) != 0) {
            throw Error("set " + format_set(s) + " is not a subset of [" + std::to_string(n) + "]");
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    build_index();
}

Family::Family(int n, std::initializer_list<std::initializer_list<int>> sets) : n_(n) {
    check_ground(n);
    std::vector<SetMask> members;
    members.reserve(sets.size());
    for (auto set : sets) members.push_back(make_set(set));
    *this = Family(n, std::move(members));
}

Family Family::power_set(int n) {
    check_ground(n);
    std::vector<SetMask> all(std::size_t{1} << n);
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = static_cast<SetMask>(s);
    return Family(n, std::move(all));
}

Family Family::star(int n, int element) {
    check_ground(n);
    if (element < 1 || element > n) throw Error("star centre out of range");
    std::vector<SetMask> sets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (s & element_bit(element)) sets.push_back(static_cast<SetMask>(s));
    }
    return Family(n, std::move(sets));
}

Family Family::from_indicator(int n, const std::vector<bool>& indicator) {
    check_ground(n);
    if (indicator.size() != (std::size_t{1} << n)) throw Error("indicator length is not 2^n");
    std::vector<SetMask> sets;
    for (std::size_t s = 0; s < indicator.size(); ++s) {
        if (indicator[s]) sets.push_back(static_cast<SetMask>(s));
    }
    return Family(n, std::move(sets));
}

void Family::build_index() {
    dense_.clear();
    if (n_ > kDenseGround) return;
    dense_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
    for (SetMask s : members_) dense_[s >> 6] |= std::uint64_t{1} << (s & 63);
}

bool Family::contains(SetMask s) const {
    if (s > full_mask(n_)) return false;
    if (!dense_.empty()) return (dense_[s >> 6] >> (s & 63)) & 1U;
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool Family::subset_of(const Family& other) const {
    return std::all_of(begin(), end(), [&](SetMask s) { return other.contains(s); });
}

std::string format_family(const Family& f) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (SetMask s : f) {
        if (!first) out << ", ";
        out << format_set(s);
        first = false;
    }
    out << "}";
    return out.str();
}

Family down_closure(const Family& f) {
    const int n = f.n();
    if (n <= kDenseGround) {
        auto ind = indicator_of(f);
        for (int i = 0; i < n; ++i) {
            const SetMask bit = SetMask{1} << i;
            for (SetMask s = 0; s < ind.size(); ++s) {
                if ((s & bit) && ind[s]) ind[s ^ bit] = true;
            }
        }
        return Family::from_indicator(n, ind);
    }
    std::unordered_set<SetMask> seen(f.begin(), f.end());
    std::vector<SetMask> stack(f.begin(), f.end());
    while (!stack.empty()) {
        SetMask s = stack.back();
        stack.pop_back();
        for (SetMask rest = s; rest; rest &= rest - 1) {
            SetMask sub = s & ~(rest & -rest);
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    return Family(n, std::vector<SetMask>(seen.begin(), seen.end()));
}

Family up_closure(const Family& f) {
    const int n = f.n();
    if (n <= kDenseGround) {
        auto ind = indicator_of(f);
        for (int i = 0; i < n; ++i) {
            const SetMask bit = SetMask{1} << i;
            for (SetMask s = 0; s < ind.size(); ++s) {
                if (!(s & bit) && ind[s]) ind[s | bit] = true;
            }
        }
        return Family::from_indicator(n, ind);
    }
    const SetMask top = full_mask(n);
    std::unordered_set<SetMask> seen(f.begin(), f.end());
    std::vector<SetMask> stack(f.begin(), f.end());
    while (!stack.empty()) {
        SetMask s = stack.back();
        stack.pop_back();
        for (SetMask rest = top & ~s; rest; rest &= rest - 1) {
            SetMask sup = s | (rest & -rest);
            if (seen.insert(sup).second) stack.push_back(sup);
        }
    }
    return Family(n, std::vector<SetMask>(seen.begin(), seen.end()));
}

Family complement_family(const Family& f) {
    const SetMask top = full_mask(f.n());
    std::vector<SetMask> sets;
    sets.reserve(f.size());
    for (SetMask s : f) sets.push_back(top & ~s);
    return Family(f.n(), std::move(sets));
}

Family family_union(const Family& a, const Family& b) {
    check_same_ground(a, b);
    std::vector<SetMask> sets(a.begin(), a.end());
    sets.insert(sets.end(), b.begin(), b.end());
    return Family(a.n(), std::move(sets));
}

Family family_intersection(const Family& a, const Family& b) {
    check_same_ground(a, b);
    std::vector<SetMask> sets;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sets));
    return Family(a.n(), std::move(sets));
}

Family family_difference(const Family& a, const Family& b) {
    check_same_ground(a, b);
    std::vector<SetMask> sets;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sets));
    return Family(a.n(), std::move(sets));
}

bool is_down_set(const Family& f) {
    for (SetMask s : f) {
        for (SetMask rest = s; rest; rest &= rest - 1) {
            if (!f.contains(s & ~(rest & -rest))) return false;
        }
    }
    return true;
}

bool is_up_set(const Family& f) {
    const SetMask top = full_mask(f.n());
    for (SetMask s : f) {
        for (SetMask rest = top & ~s; rest; rest &= rest - 1) {
            if (!f.contains(s | (rest & -rest))) return false;
        }
    }
    return true;
}

bool is_intersecting(const Family& f) { return is_t_intersecting(f, 1); }
bool is_union(const Family& f) { return is_s_union(f, 1); }
bool is_iu(const Family& f) { return is_ts_family(f, 1, 1); }

bool is_t_intersecting(const Family& f, int t) {
    return all_pairs(f, [t](SetMask a, SetMask b) { return popcount(a & b) >= t; });
}

bool is_s_union(const Family& f, int s) {
    const int cap = f.n() - s;
    return all_pairs(f, [cap](SetMask a, SetMask b) { return popcount(a | b) <= cap; });
}

bool is_ts_family(const Family& f, int t, int s) {
    const int cap = f.n() - s;
    return all_pairs(f, [t, cap](SetMask a, SetMask b) {
        return popcount(a & b) >= t && popcount(a | b) <= cap;
    });
}

bool is_cross_intersecting(const Family& f, const Family& g) { return is_cross_ts(f, g, 1, 0); }
bool is_cross_union(const Family& f, const Family& g) { return is_cross_ts(f, g, 0, 1); }
bool is_cross_iu(const Family& f, const Family& g) { return is_cross_ts(f, g, 1, 1); }

bool is_cross_ts(const Family& f, const Family& g, int t, int s) {
    const int cap = f.n() - s;
    return all_cross_pairs(f, g, [t, cap](SetMask a, SetMask b) {
        return popcount(a & b) >= t && popcount(a | b) <= cap;
    });
}

int covering_number(const Family& f) {
    if (f.contains(0)) throw Error("covering number undefined: empty set member");
    if (f.empty()) return 0;
    const int n = f.n();
    for (int k = 1; k <= n; ++k) {
        // Gosper's hack over k-subsets of [n].
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t t = (std::uint64_t{1} << k) - 1; t < limit;) {
            const auto cover = static_cast<SetMask>(t);
            if (std::all_of(f.begin(), f.end(), [cover](SetMask s) { return (s & cover) != 0; })) {
                return k;
            }
            const std::uint64_t low = t & (~t + 1);
            const std::uint64_t ripple = t + low;
            t = (((ripple ^ t) >> 2) / low) | ripple;
        }
    }
    return n;  // unreachable for families without the empty set
}

std::size_t max_degree(const Family& d) {
    std::size_t best = 0;
    for (int i = 0; i < d.n(); ++i) {
        const SetMask bit = SetMask{1} << i;
        auto deg = static_cast<std::size_t>(
            std::count_if(d.begin(), d.end(), [bit](SetMask s) { return (s & bit) != 0; }));
        best = std::max(best, deg);
    }
    return best;
}

LinkDeletion link_and_deletion(const Family& f, int element) {
    if (element < 1 || element > f.n()) {
        throw Error("element " + std::to_string(element) + " out of range for n=" +
                    std::to_string(f.n()));
    }
    const SetMask bit = element_bit(element);
    std::vector<SetMask> link;
    std::vector<SetMask> deletion;
    for (SetMask s : f) {
        if (s & bit) {
            link.push_back(s & ~bit);
        } else {
            deletion.push_back(s);
        }
    }
    return {Family(f.n(), std::move(link)), Family(f.n(), std::move(deletion))};
}

}  // namespace setmatch
