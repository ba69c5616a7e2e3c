#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "igusa/polynomial.hpp"

namespace igusa {

// Row-major list of integer vectors.
using IntMatrix = std::vector<IntVector>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t gcd_of(std::span<const std::int64_t> v);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

std::size_t rank(const IntMatrix& rows);
mpz_class determinant(const IntMatrix& square);

// Rank of an integer matrix over F_p.
std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p);

// Primitive generator of the orthogonal complement of n-1 independent vectors
// in Z^n (signed maximal minors), or nullopt when they are dependent.
std::optional<IntVector> orthogonal_complement_generator(const IntMatrix& rows);

// Index of the lattice spanned by independent `rows` inside the integer points
// of their rational span: the gcd of the maximal minors.
mpz_class lattice_index(const IntMatrix& rows);

// Coordinates of `x` in the basis `rows` (independent), as integer numerators
// over a common positive denominator; nullopt if x is not in their span.
struct RationalCoordinates {
    std::vector<mpz_class> numerators;
    mpz_class denominator;
};
std::optional<RationalCoordinates> coordinates_in_span(const IntMatrix& rows,
                                                       std::span<const std::int64_t> x);

} // namespace igusa
