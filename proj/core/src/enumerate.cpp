#include "setmatch/error.hpp"
#include "setmatch/oracles.hpp"

namespace setmatch {

std::vector<FamilyWord> down_set_words(int n) {
    if (n < 0 || n > kMaxWordGround) {
        throw Error("down-set enumeration supports n <= 6, got n=" + std::to_string(n));
    }
    // {} and {emptyset}
    std::vector<FamilyWord> current{0, 1};
    for (int k = 1; k <= n; ++k) {
        const unsigned shift = 1U << (k - 1);
        std::vector<FamilyWord> next;
        for (FamilyWord deletion : current) {
            for (FamilyWord link : current) {
                if ((link & ~deletion) == 0) next.push_back(deletion | (link << shift));
            }
        }
        current = std::move(next);
    }
    return current;
}

void for_each_down_set(int n, const std::function<void(const Family&)>& visit) {
    for (FamilyWord w : down_set_words(n)) visit(from_word(n, w));
}

std::vector<Family> enumerate_down_sets(int n) {
    std::vector<Family> out;
    for_each_down_set(n, [&](const Family& f) { out.push_back(f); });
    return out;
}

}  // namespace setmatch
