#pragma once

// Brute-force p-adic integration used to check the closed formulas. The
// integrand |f-side|^{s0} |g| is evaluated on every residue class modulo p^M;
// classes whose orders are not determined below M only widen the bracket.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "igusa/fside.hpp"
#include "igusa/kernels.hpp"

namespace igusa {

struct Bracket {
    mpq_class lo;
    mpq_class hi;

    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
    mpq_class width() const { return hi - lo; }
};

std::string to_string(const Bracket& b);

Bracket to_bracket(const kernels::ResidueHistogram& h, std::uint64_t p, unsigned level, std::size_t n);

// Integral over Z_p^n.
Bracket truncated_integral(const FSide& fside, const Measure& g, std::uint64_t p, unsigned s0,
                           unsigned level);

// A torus point where the f-side and g vanish mod p with stacked Jacobian of
// rank t+1, or nullopt when there is none ("vacuous").
std::optional<IntVector> find_base_point(const FSide& fside, const IntegerPolynomial& g,
                                         std::uint64_t p);

// mu{x in a + (pZ_p)^n : f-side(x) = 0 mod p^k, g(x) = 0 mod p^l}, counted
// exactly. Throws HypothesisError if `a` violates the lemma's hypotheses.
mpq_class measure_A_kl(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                       std::uint64_t p, unsigned k, unsigned l);

// Closed values of the measure lemmas.
mpq_class lemma_value(std::uint64_t p, std::size_t n, std::size_t t, unsigned k, unsigned l);

// Which of the four cases a coset falls into.
struct CosetCase {
    bool f_zero = false;
    bool g_zero = false;
};

CosetCase coset_case(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                     std::uint64_t p);

// Integral over a + (pZ_p)^n. Throws HypothesisError unless the three rank
// conditions hold at a.
Bracket coset_integral(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                       std::uint64_t p, unsigned s0, unsigned level);

// The four-case value at s = s0 (t components; t = 1 for a single f).
mpq_class proposition_value(CosetCase c, std::uint64_t p, std::size_t n, std::size_t t, unsigned s0);

// Integral over (Z_p^x)^n. Throws HypothesisError unless the rank
// conditions hold at every torus point.
Bracket torus_integral(const FSide& fside, const Measure& g, std::uint64_t p, unsigned s0,
                       unsigned level);

// The N/P/Q torus formula at s = s0.
mpq_class corollary_value(std::uint64_t N, std::uint64_t P, std::uint64_t Q, std::uint64_t p,
                          std::size_t n, std::size_t t, unsigned s0);

} // namespace igusa
