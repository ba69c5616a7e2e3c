#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/fan.hpp"
#include "igusa/fside.hpp"
#include "igusa/polynomial.hpp"

namespace igusa {

/// Torus point counts for one cone, over (F_p^x)^n:
///   N: f-side vanishes, g does not;  P: g vanishes, f-side does not;
///   Q: both vanish.
/// For a mapping "vanishes" means every component vanishes.
struct CountTriple {
    std::uint64_t N = 0;
    std::uint64_t P = 0;
    std::uint64_t Q = 0;
    friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

// An empty `fside` never vanishes; so does an absent `g`.
CountTriple count_triple(const PolynomialMapping& fside, const Measure& g, std::uint64_t p);
CountTriple count_triple_serial(const PolynomialMapping& fside, const Measure& g, std::uint64_t p);

struct DegeneracyWitness {
    std::string where;     // face or cone description
    IntVector point;       // in {1..p-1}^n
    std::string condition; // which condition failed
};

struct DegeneracyReport {
    std::vector<DegeneracyWitness> witnesses;
    bool ok() const { return witnesses.empty(); }
};

// At most this many witnesses are recorded per check.
inline constexpr std::size_t kMaxWitnesses = 32;

DegeneracyReport check_nondegenerate_single(const IntegerPolynomial& f, std::uint64_t p);
DegeneracyReport check_strong_nondegenerate(const PolynomialMapping& ff, std::uint64_t p);

// Pair condition over every cone of `partition` (the pair partition of the
// f-side and g polyhedra): at common torus zeros the stacked Jacobian of the
// restricted f-side and g has rank t+1. A monomial-ideal f-side never
// vanishes on the torus, so the condition holds vacuously.
DegeneracyReport check_pair_nondegenerate(const FSide& fside, const IntegerPolynomial& g,
                                          const ConePartition& partition, std::uint64_t p);

// The three torus conditions on the full polynomials (no face restriction):
// f-side smooth where it vanishes, g smooth where it vanishes, and the pair
// of full rank where both vanish.
DegeneracyReport check_torus_hypotheses(const PolynomialMapping& fside, const Measure& g,
                                        std::uint64_t p);

// Rank of the Jacobian of `polys` at `a` over F_p.
std::size_t jacobian_rank_mod_p(const std::vector<ModPolynomial>& polys,
                                std::span<const std::uint64_t> a, std::uint64_t p);

} // namespace igusa
