#pragma once

#include <stdexcept>
#include <string>

namespace mtk {

/// Domain error: a precondition of an operation does not hold
/// (set not in system, malformed input, value out of range).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mtk
