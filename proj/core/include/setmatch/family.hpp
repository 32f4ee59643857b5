#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace setmatch {

// Bit i set <=> element i+1 belongs to the set.
using SetMask = std::uint32_t;

inline constexpr int kMaxGround = 25;
// Families over at most this many elements keep a dense 2^n membership bitset.
inline constexpr int kDenseGround = 20;

inline constexpr SetMask full_mask(int n) {
    return n >= 32 ? ~SetMask{0} : static_cast<SetMask>((std::uint64_t{1} << n) - 1);
}

inline constexpr SetMask element_bit(int element) {
    return SetMask{1} << (element - 1);
}

int popcount(SetMask s);

// Mask from 1-based element list.
SetMask make_set(std::initializer_list<int> elements);

// "{1,3}" / "{}" rendering with 1-based elements.
std::string format_set(SetMask s);

// A deduplicated collection of subsets of [n], kept in ascending mask order.
class Family {
public:
    Family() = default;
    explicit Family(int n);
    Family(int n, std::vector<SetMask> members);
    Family(int n, std::initializer_list<std::initializer_list<int>> sets);

    static Family power_set(int n);
    static Family star(int n, int element);
    // Members are the positions of set bits in a 0/1 indicator over 2^n masks.
    static Family from_indicator(int n, const std::vector<bool>& indicator);

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(SetMask s) const;

    std::span<const SetMask> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool subset_of(const Family& other) const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    void build_index();

    int n_ = 0;
    std::vector<SetMask> members_;
    std::vector<std::uint64_t> dense_;
};

std::string format_family(const Family& f);

// Closures and complements.
Family down_closure(const Family& f);
Family up_closure(const Family& f);
Family complement_family(const Family& f);
Family family_union(const Family& a, const Family& b);
Family family_intersection(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);

// Pairwise predicates. All quantify over unordered pairs including a member
// paired with itself, so the empty family satisfies each of them.
bool is_down_set(const Family& f);
bool is_up_set(const Family& f);
bool is_intersecting(const Family& f);
bool is_union(const Family& f);
bool is_iu(const Family& f);
bool is_t_intersecting(const Family& f, int t);
bool is_s_union(const Family& f, int s);
bool is_ts_family(const Family& f, int t, int s);

bool is_cross_intersecting(const Family& f, const Family& g);
bool is_cross_union(const Family& f, const Family& g);
bool is_cross_iu(const Family& f, const Family& g);
bool is_cross_ts(const Family& f, const Family& g, int t, int s);

// Minimum |T| with T meeting every member. 0 for the empty family; throws
// when the empty set is a member.
int covering_number(const Family& f);

// Largest number of members sharing a single element.
std::size_t max_degree(const Family& d);

struct LinkDeletion {
    Family link;      // {F \ {i} : i in F}
    Family deletion;  // {F : i not in F}
};

// Both parts are returned over the same ambient n with element i unused.
LinkDeletion link_and_deletion(const Family& f, int element);

}  // namespace setmatch
