#include "igusa/kernels.hpp"

#include <stdexcept>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"

namespace igusa::kernels {

namespace {

constexpr std::uint64_t kMaxEnumeration = 100'000'000;

std::uint64_t reduce(const mpz_class& c, std::uint64_t m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), m);
    return r.get_ui();
}

struct Pattern {
    bool f_zero;
    bool g_zero;
};

inline Pattern zero_pattern(std::span<const CompiledPolynomial> fside, const CompiledPolynomial* g,
                            std::span<const std::uint64_t> a) {
    bool f_zero = !fside.empty();
    for (const auto& f : fside)
        if (f(a) != 0) {
            f_zero = false;
            break;
        }
    bool g_zero = g && (*g)(a) == 0;
    return {f_zero, g_zero};
}

inline void tally(TorusCounts& c, Pattern pat) {
    if (pat.f_zero && pat.g_zero)
        ++c.both;
    else if (pat.f_zero)
        ++c.f_only;
    else if (pat.g_zero)
        ++c.g_only;
    else
        ++c.neither;
}

std::vector<std::vector<std::uint64_t>> coordinate_residues(const ResidueDomain& d) {
    const std::uint64_t lift = checked_pow(d.p, d.level - 1, kMaxEnumeration);
    if (lift == 0) throw SizeGuardError("residue enumeration exceeds 10^8 classes");
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& allowed : d.allowed_mod_p) {
        std::vector<std::uint64_t> rs;
        for (auto r : allowed)
            for (std::uint64_t j = 0; j < lift; ++j) rs.push_back(r + d.p * j);
        out.push_back(std::move(rs));
    }
    return out;
}

struct Orders {
    unsigned f, g;
    bool exact;
};

inline Orders orders_at(std::span<const CompiledPolynomial> fside, const CompiledPolynomial* g,
                        std::span<const std::uint64_t> x, std::uint64_t p, unsigned level) {
    unsigned of = 0;
    bool exact = true;
    if (!fside.empty()) {
        of = level;
        for (const auto& f : fside) of = std::min(of, valuation(f(x), p, level));
        exact = of < level;
    }
    unsigned og = 0;
    if (g) {
        og = valuation((*g)(x), p, level);
        exact = exact && og < level;
    }
    return {of, og, exact};
}

void check_modulus(std::span<const CompiledPolynomial> fside, const CompiledPolynomial* g,
                   std::uint64_t modulus) {
    for (const auto& f : fside)
        if (f.modulus() != modulus) throw std::invalid_argument("f-side compiled for wrong modulus");
    if (g && g->modulus() != modulus) throw std::invalid_argument("g compiled for wrong modulus");
}

} // namespace

CompiledPolynomial::CompiledPolynomial(const IntegerPolynomial& f, std::uint64_t modulus)
    : nvars_(f.nvars()), modulus_(modulus) {
    for (const auto& [w, c] : f.terms()) {
        auto r = reduce(c, modulus);
        if (r == 0) continue;
        coeffs_.push_back(r);
        for (auto e : w) exps_.push_back(static_cast<std::uint64_t>(e));
    }
}

CompiledPolynomial::CompiledPolynomial(const ModPolynomial& f) : nvars_(f.nvars), modulus_(f.p) {
    for (const auto& [w, c] : f.terms) {
        coeffs_.push_back(c);
        for (auto e : w) exps_.push_back(static_cast<std::uint64_t>(e));
    }
}

std::uint64_t CompiledPolynomial::operator()(std::span<const std::uint64_t> a) const {
    std::uint64_t acc = 0;
    const std::uint64_t* e = exps_.data();
    for (auto c : coeffs_) {
        std::uint64_t term = c;
        for (std::size_t i = 0; i < nvars_; ++i, ++e)
            if (*e && term) term = mul_mod(term, pow_mod(a[i], *e, modulus_), modulus_);
        acc += term;
        if (acc >= modulus_) acc -= modulus_;
    }
    return acc;
}

std::uint64_t torus_size(std::size_t n, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("p must be prime");
    auto total = checked_pow(p - 1, n, kMaxEnumeration);
    if (total == 0) throw SizeGuardError("(p-1)^n exceeds 10^8");
    return total;
}

TorusCounts torus_zero_counts(std::span<const CompiledPolynomial> fside,
                              const CompiledPolynomial* g, std::size_t n, std::uint64_t p) {
    check_modulus(fside, g, p);
    const std::uint64_t total = torus_size(n, p);
    std::uint64_t f_only = 0, g_only = 0, both = 0, neither = 0;
#pragma omp parallel reduction(+ : f_only, g_only, both, neither)
    {
        std::vector<std::uint64_t> a(n);
        TorusCounts local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            decode_torus_point(static_cast<std::uint64_t>(i), p, a);
            tally(local, zero_pattern(fside, g, a));
        }
        f_only += local.f_only;
        g_only += local.g_only;
        both += local.both;
        neither += local.neither;
    }
    return {f_only, g_only, both, neither};
}

std::uint64_t ResidueDomain::size() const {
    std::uint64_t lift = checked_pow(p, level - 1, kMaxEnumeration);
    if (lift == 0) throw SizeGuardError("residue enumeration exceeds 10^8 classes");
    std::uint64_t total = 1;
    for (const auto& a : allowed_mod_p) {
        if (a.empty()) return 0;
        std::uint64_t per = a.size() * lift;
        if (total > kMaxEnumeration / per) throw SizeGuardError("residue enumeration exceeds 10^8 classes");
        total *= per;
    }
    return total;
}

ResidueHistogram integrate_residues(std::span<const CompiledPolynomial> fside,
                                    const CompiledPolynomial* g, const ResidueDomain& domain,
                                    unsigned s0) {
    const std::uint64_t total = domain.size();
    const auto modulus = checked_pow(domain.p, domain.level, UINT64_MAX / 2);
    check_modulus(fside, g, modulus);
    const auto coords = coordinate_residues(domain);
    const std::size_t n = coords.size();
    const std::size_t buckets = static_cast<std::size_t>(s0 + 1) * domain.level + 1;

    ResidueHistogram out;
    out.exact.assign(buckets, 0);
    out.upper.assign(buckets, 0);
    out.classes = total;
#pragma omp parallel
    {
        std::vector<std::uint64_t> exact(buckets, 0), upper(buckets, 0);
        std::vector<std::uint64_t> x(n);
#pragma omp for schedule(static)
        for (std::int64_t flat = 0; flat < static_cast<std::int64_t>(total); ++flat) {
            auto idx = static_cast<std::uint64_t>(flat);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = coords[i][idx % coords[i].size()];
                idx /= coords[i].size();
            }
            auto o = orders_at(fside, g, x, domain.p, domain.level);
            const std::size_t e = static_cast<std::size_t>(s0) * o.f + o.g;
            ++upper[e];
            if (o.exact) ++exact[e];
        }
#pragma omp critical
        for (std::size_t e = 0; e < buckets; ++e) {
            out.exact[e] += exact[e];
            out.upper[e] += upper[e];
        }
    }
    return out;
}

namespace serial {

TorusCounts torus_zero_counts(std::span<const CompiledPolynomial> fside,
                              const CompiledPolynomial* g, std::size_t n, std::uint64_t p) {
    check_modulus(fside, g, p);
    TorusCounts c;
    torus_size(n, p);
    std::vector<std::uint64_t> a(n, 1);
    for (;;) {
        tally(c, zero_pattern(fside, g, a));
        std::size_t i = 0;
        while (i < n && a[i] == p - 1) a[i++] = 1;
        if (i == n) break;
        ++a[i];
    }
    return c;
}

ResidueHistogram integrate_residues(std::span<const CompiledPolynomial> fside,
                                    const CompiledPolynomial* g, const ResidueDomain& domain,
                                    unsigned s0) {
    const auto modulus = checked_pow(domain.p, domain.level, UINT64_MAX / 2);
    check_modulus(fside, g, modulus);
    const auto coords = coordinate_residues(domain);
    const std::size_t n = coords.size();
    const std::size_t buckets = static_cast<std::size_t>(s0 + 1) * domain.level + 1;
    ResidueHistogram out;
    out.exact.assign(buckets, 0);
    out.upper.assign(buckets, 0);
    out.classes = domain.size();
    if (out.classes == 0) return out;
    std::vector<std::size_t> pos(n, 0);
    std::vector<std::uint64_t> x(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) x[i] = coords[i][pos[i]];
        auto o = orders_at(fside, g, x, domain.p, domain.level);
        const std::size_t e = static_cast<std::size_t>(s0) * o.f + o.g;
        ++out.upper[e];
        if (o.exact) ++out.exact[e];
        std::size_t i = 0;
        while (i < n && pos[i] + 1 == coords[i].size()) pos[i++] = 0;
        if (i == n) break;
        ++pos[i];
    }
    return out;
}

} // namespace serial

} // namespace igusa::kernels
