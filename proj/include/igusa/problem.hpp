#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igusa/fside.hpp"

namespace igusa {

/// A parsed problem file:
///
///   mode=ideal|single|mapping
///   n=2
///   p=13
///   generators=x^5*y, x^3*y^2, x^2*y^5   (ideal)
///   f=x + y                              (single: once; mapping: once per component)
///   g=x^4*y^2 + x*y^5 | trivial
///   level=10                             (optional, oracle truncation)
///   s0=1                                 (optional, oracle exponent)
///
/// '#' starts a comment; blank lines are ignored.
struct ProblemSpec {
    Mode mode = Mode::single;
    std::size_t n = 0;
    std::uint64_t p = 0;
    std::vector<std::string> f_text;
    std::string generators_text;
    std::string g_text = "trivial";
    std::optional<unsigned> level;
    std::optional<unsigned> s0;

    FSide fside() const;
    Measure measure() const;
};

// Throws ParseError with a "line N:" prefix on malformed input.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

// Monic monomials separated by commas, e.g. "x^5*y, x^3*y^2".
MonomialIdealSpec parse_generators(std::string_view text, std::size_t n);

} // namespace igusa
