#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "setmatch/family.hpp"

namespace setmatch {

// A function 2^[n] -> N stored densely, indexed by SetMask.
class WeightFn {
public:
    WeightFn() : values_(1, 0) {}
    explicit WeightFn(int n);
    WeightFn(int n, std::vector<std::uint64_t> values);

    static WeightFn characteristic(const Family& f);

    int n() const { return n_; }
    std::uint64_t operator()(SetMask s) const { return values_[s]; }
    std::uint64_t& operator[](SetMask s) { return values_[s]; }
    std::span<const std::uint64_t> values() const { return values_; }
    std::size_t domain_size() const { return values_.size(); }

    // |f|, the sum of all values.
    std::uint64_t total() const;
    // f(X) <= f(X \ {i}) for every X and i in X.
    bool is_monotone() const;

    friend bool operator==(const WeightFn&, const WeightFn&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> values_;
};

}  // namespace setmatch
