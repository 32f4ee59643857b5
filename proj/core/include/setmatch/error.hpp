#pragma once

#include <stdexcept>
#include <string>

namespace setmatch {

// Thrown for violated preconditions: bad ground sizes, non-monotone weights,
// families that are not down-sets where one is required, size caps exceeded.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setmatch
