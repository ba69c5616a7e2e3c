#pragma once

// Exhaustive enumeration kernels. Each kernel has an OpenMP version used by
// the library and a plain serial version kept as the reference it is tested
// and benchmarked against.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <omp.h>

#include "igusa/polynomial.hpp"

namespace igusa::kernels {

/// A polynomial with coefficients reduced modulo a fixed modulus, laid out
/// flat for repeated evaluation.
class CompiledPolynomial {
public:
    CompiledPolynomial() = default;
    CompiledPolynomial(const IntegerPolynomial& f, std::uint64_t modulus);
    CompiledPolynomial(const ModPolynomial& f);

    std::uint64_t operator()(std::span<const std::uint64_t> a) const;
    std::uint64_t modulus() const { return modulus_; }
    std::size_t nvars() const { return nvars_; }

private:
    std::size_t nvars_ = 0;
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> coeffs_;
    std::vector<std::uint64_t> exps_; // nvars_ per term
};

struct TorusCounts {
    std::uint64_t f_only = 0;  // f-side vanishes, g does not
    std::uint64_t g_only = 0;  // g vanishes, f-side does not
    std::uint64_t both = 0;
    std::uint64_t neither = 0;
    friend bool operator==(const TorusCounts&, const TorusCounts&) = default;
};

// Zero pattern over (F_p^x)^n. The f-side vanishes when every component does
// and there is at least one component; an absent g never vanishes.
TorusCounts torus_zero_counts(std::span<const CompiledPolynomial> fside,
                              const CompiledPolynomial* g, std::size_t n, std::uint64_t p);

namespace serial {
TorusCounts torus_zero_counts(std::span<const CompiledPolynomial> fside,
                              const CompiledPolynomial* g, std::size_t n, std::uint64_t p);
}

// Decodes flat index `idx` into a torus point with coordinates in [1, p).
inline void decode_torus_point(std::uint64_t idx, std::uint64_t p, std::span<std::uint64_t> a) {
    for (auto& x : a) {
        x = 1 + idx % (p - 1);
        idx /= (p - 1);
    }
}

std::uint64_t torus_size(std::size_t n, std::uint64_t p);

/// Torus points (in flat-index order, at most `limit`) where `pred` holds.
template <class Pred>
std::vector<std::vector<std::uint64_t>> find_torus_points(std::size_t n, std::uint64_t p,
                                                          std::size_t limit, Pred pred) {
    const std::uint64_t total = torus_size(n, p);
    std::vector<std::uint64_t> hits;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        std::vector<std::uint64_t> a(n);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            decode_torus_point(static_cast<std::uint64_t>(i), p, a);
            if (pred(std::span<const std::uint64_t>(a))) local.push_back(static_cast<std::uint64_t>(i));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    if (hits.size() > limit) hits.resize(limit);
    std::vector<std::vector<std::uint64_t>> out;
    for (auto i : hits) {
        std::vector<std::uint64_t> a(n);
        decode_torus_point(i, p, a);
        out.push_back(std::move(a));
    }
    return out;
}

/// Integrand histogram for a truncated p-adic integral over a product of
/// residue classes modulo p^level. Bucket e counts residue classes whose
/// contribution is p^{-(level*n + e)}, with e = s0*ord(f-side) + ord(g).
/// `exact` collects classes where both orders are determined below the
/// level; `upper` collects every class at its largest possible value.
struct ResidueHistogram {
    std::vector<std::uint64_t> exact;
    std::vector<std::uint64_t> upper;
    std::uint64_t classes = 0;
    friend bool operator==(const ResidueHistogram&, const ResidueHistogram&) = default;
};

struct ResidueDomain {
    std::uint64_t p = 2;
    unsigned level = 1;
    // Per coordinate: the allowed residues modulo p.
    std::vector<std::vector<std::uint64_t>> allowed_mod_p;

    std::uint64_t size() const;
};

ResidueHistogram integrate_residues(std::span<const CompiledPolynomial> fside,
                                    const CompiledPolynomial* g, const ResidueDomain& domain,
                                    unsigned s0);

namespace serial {
ResidueHistogram integrate_residues(std::span<const CompiledPolynomial> fside,
                                    const CompiledPolynomial* g, const ResidueDomain& domain,
                                    unsigned s0);
}

} // namespace igusa::kernels
