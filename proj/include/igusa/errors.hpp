#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igusa {

// Malformed polynomial text or problem file. `position` is a 0-based byte
// offset into the offending text, or npos when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = npos)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t position_;
};

// An exhaustive enumeration would exceed its configured budget.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The hypotheses of a closed formula do not hold for the given input.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal cross-check failed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace igusa
