#include "setmatch/weight_fn.hpp"

#include <limits>
#include <numeric>

#include "setmatch/error.hpp"

namespace setmatch {

WeightFn::WeightFn(int n) : n_(n) {
    if (n < 0 || n > kMaxGround) throw Error("weight function ground size out of range");
    values_.assign(std::size_t{1} << n, 0);
}

WeightFn::WeightFn(int n, std::vector<std::uint64_t> values) : n_(n), values_(std::move(values)) {
    if (n < 0 || n > kMaxGround) throw Error("weight function ground size out of range");
    if (values_.size() != (std::size_t{1} << n)) {
        throw Error("weight function needs 2^" + std::to_string(n) + " values, got " +
                    std::to_string(values_.size()));
    }
    std::uint64_t sum = 0;
    for (std::uint64_t v : values_) {
        if (v > std::numeric_limits<std::uint64_t>::max() - sum) throw Error("|f| overflows 64 bits");
        sum += v;
    }
}

WeightFn WeightFn::characteristic(const Family& f) {
    WeightFn w(f.n());
    for (SetMask s : f) w.values_[s] = 1;
    return w;
}

std::uint64_t WeightFn::total() const {
    return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
}

bool WeightFn::is_monotone() const {
    for (SetMask s = 0; s < values_.size(); ++s) {
        for (SetMask rest = s; rest; rest &= rest - 1) {
            if (values_[s] > values_[s & ~(rest & (~rest + 1))]) return false;
        }
    }
    return true;
}

}  // namespace setmatch
