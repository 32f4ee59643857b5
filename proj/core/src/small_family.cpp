#include "setmatch/small_family.hpp"

#include <bit>
#include <vector>

#include "setmatch/error.hpp"

namespace setmatch {

namespace {

void check_word_ground(int n) {
    if (n < 0 || n > kMaxWordGround) {
        throw Error("word families need n <= 6, got n=" + std::to_string(n));
    }
}

// Positions S of a word that contain element i+1.
constexpr std::array<FamilyWord, 6> kElementPositions = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

FamilyWord to_word(const Family& f) {
    check_word_ground(f.n());
    FamilyWord w = 0;
    for (SetMask s : f) w |= FamilyWord{1} << s;
    return w;
}

Family from_word(int n, FamilyWord w) {
    check_word_ground(n);
    w &= universe_word(n);
    std::vector<SetMask> sets;
    sets.reserve(static_cast<std::size_t>(std::popcount(w)));
    for (; w; w &= w - 1) sets.push_back(static_cast<SetMask>(std::countr_zero(w)));
    return Family(n, std::move(sets));
}

int word_size(FamilyWord w) { return std::popcount(w); }

FamilyWord down_closure_word(int n, FamilyWord w) {
    for (int i = 0; i < n; ++i) w |= (w & kElementPositions[i]) >> (1U << i);
    return w;
}

FamilyWord up_closure_word(int n, FamilyWord w) {
    const FamilyWord all = universe_word(n);
    for (int i = 0; i < n; ++i) w |= ((w & ~kElementPositions[i]) << (1U << i)) & all;
    return w;
}

FamilyWord complement_word(int n, FamilyWord w) {
    // Position S moves to position [n] \ S, i.e. the word is bit-reversed
    // within its 2^n positions.
    FamilyWord out = 0;
    const unsigned top = (1U << n) - 1;
    for (; w; w &= w - 1) out |= FamilyWord{1} << (top ^ static_cast<unsigned>(std::countr_zero(w)));
    return out;
}

bool is_down_word(int n, FamilyWord w) { return down_closure_word(n, w) == w; }

PartnerTable::PartnerTable(int n, int t, int s) : n_(n) {
    check_word_ground(n);
    const unsigned count = 1U << n;
    for (unsigned a = 0; a < count; ++a) {
        FamilyWord w = 0;
        for (unsigned b = 0; b < count; ++b) {
            if (std::popcount(a & b) >= t && std::popcount(a | b) <= n - s) w |= FamilyWord{1} << b;
        }
        partner_[a] = w;
    }
}

FamilyWord PartnerTable::common_partners(FamilyWord w) const {
    FamilyWord acc = universe_word(n_);
    for (; w; w &= w - 1) acc &= partner_[std::countr_zero(w)];
    return acc;
}

}  // namespace setmatch
