#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "setmatch/error.hpp"
#include "setmatch/theorem_lab.hpp"

namespace setmatch::detail {

inline void require_range(const char* what, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw Error(std::string(what) + " must be in [" + std::to_string(lo) + "," + std::to_string(hi) +
                    "], got " + std::to_string(value));
    }
}

inline std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// std::mt19937_64 is specified bit-exactly; distributions are not, so draws
// go through these helpers instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t bits() { return engine_(); }
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

}  // namespace setmatch::detail
