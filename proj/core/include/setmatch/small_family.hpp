#pragma once

#include <array>
#include <cstdint>

#include "setmatch/family.hpp"

namespace setmatch {

// A family over [n], n <= 6, packed into one word: bit S is set iff the set
// with mask S is a member. Used by the enumerators and exhaustive scans.
using FamilyWord = std::uint64_t;

inline constexpr int kMaxWordGround = 6;

// All 2^n positions of a word over [n].
constexpr FamilyWord universe_word(int n) {
    return n >= 6 ? ~FamilyWord{0} : (FamilyWord{1} << (1U << n)) - 1;
}

FamilyWord to_word(const Family& f);
Family from_word(int n, FamilyWord w);

int word_size(FamilyWord w);

FamilyWord down_closure_word(int n, FamilyWord w);
FamilyWord up_closure_word(int n, FamilyWord w);
FamilyWord complement_word(int n, FamilyWord w);
bool is_down_word(int n, FamilyWord w);

// partner[S] is the word of sets B with |S & B| >= t and |S | B| <= n - s.
// A family G is cross-(t,s) with F iff G is contained in the AND of
// partner[S] over S in F.
class PartnerTable {
public:
    PartnerTable(int n, int t, int s);

    int n() const { return n_; }
    FamilyWord partner(SetMask s) const { return partner_[s]; }
    // AND of partner words over the members of w; universe for w = 0.
    FamilyWord common_partners(FamilyWord w) const;
    bool cross(FamilyWord f, FamilyWord g) const { return (g & ~common_partners(f)) == 0; }
    bool self(FamilyWord f) const { return cross(f, f); }

private:
    int n_;
    std::array<FamilyWord, 64> partner_{};
};

}  // namespace setmatch
