#include "igusa/oracle.hpp"

#include <algorithm>

#include "igusa/counting.hpp"
#include "igusa/errors.hpp"
#include "igusa/modular.hpp"
#include "igusa/rational.hpp"

namespace igusa {

namespace {

std::uint64_t modulus_for(std::uint64_t p, unsigned level) {
    auto m = checked_pow(p, level, std::uint64_t{1} << 62);
    if (m == 0) throw SizeGuardError("p^level does not fit in 62 bits");
    return m;
}

std::vector<kernels::CompiledPolynomial> compile_fside(const FSide& fside, std::uint64_t modulus) {
    std::vector<kernels::CompiledPolynomial> out;
    for (const auto& f : fside.components().components) out.emplace_back(f, modulus);
    return out;
}

kernels::ResidueDomain full_domain(std::uint64_t p, unsigned level, std::size_t n) {
    kernels::ResidueDomain d{p, level, {}};
    std::vector<std::uint64_t> all(p);
    for (std::uint64_t r = 0; r < p; ++r) all[r] = r;
    d.allowed_mod_p.assign(n, all);
    return d;
}

kernels::ResidueDomain torus_domain(std::uint64_t p, unsigned level, std::size_t n) {
    kernels::ResidueDomain d{p, level, {}};
    std::vector<std::uint64_t> units;
    for (std::uint64_t r = 1; r < p; ++r) units.push_back(r);
    d.allowed_mod_p.assign(n, units);
    return d;
}

kernels::ResidueDomain coset_domain(std::uint64_t p, unsigned level, const IntVector& a) {
    kernels::ResidueDomain d{p, level, {}};
    const auto sp = static_cast<std::int64_t>(p);
    for (auto x : a) d.allowed_mod_p.push_back({static_cast<std::uint64_t>(((x % sp) + sp) % sp)});
    return d;
}

Bracket integrate(const FSide& fside, const Measure& g, const kernels::ResidueDomain& domain,
                  unsigned s0) {
    if (domain.level == 0) throw std::invalid_argument("truncation level must be >= 1");
    if (s0 == 0) throw std::invalid_argument("s0 must be >= 1");
    const auto modulus = modulus_for(domain.p, domain.level);
    auto fs = compile_fside(fside, modulus);
    std::optional<kernels::CompiledPolynomial> gc;
    if (g) gc.emplace(*g, modulus);
    auto h = kernels::integrate_residues(fs, gc ? &*gc : nullptr, domain, s0);
    return to_bracket(h, domain.p, domain.level, domain.allowed_mod_p.size());
}

std::vector<std::uint64_t> residues_mod_p(const IntVector& a, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    const auto sp = static_cast<std::int64_t>(p);
    for (auto x : a) out.push_back(static_cast<std::uint64_t>(((x % sp) + sp) % sp));
    return out;
}

// Values and Jacobian of the f-side and g at a point mod p.
struct PointData {
    bool f_zero = false;
    bool g_zero = false;
    std::size_t f_rank = 0;
    std::size_t g_rank = 0;
    std::size_t pair_rank = 0;
};

PointData point_data(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                     std::uint64_t p) {
    if (a.size() != fside.nvars() || g.nvars() != fside.nvars())
        throw std::invalid_argument("point and polynomials disagree on n");
    const auto x = residues_mod_p(a, p);
    std::vector<ModPolynomial> fs;
    for (const auto& f : fside.components().components) fs.push_back(reduce_mod_p(f, p));
    const auto gm = reduce_mod_p(g, p);
    PointData d;
    d.f_zero = std::all_of(fs.begin(), fs.end(), [&](const auto& f) { return evaluate_mod(f, x) == 0; });
    d.g_zero = evaluate_mod(gm, x) == 0;
    d.f_rank = jacobian_rank_mod_p(fs, x, p);
    d.g_rank = jacobian_rank_mod_p({gm}, x, p);
    auto stacked = fs;
    stacked.push_back(gm);
    d.pair_rank = jacobian_rank_mod_p(stacked, x, p);
    return d;
}

void require_function_mode(const FSide& fside) {
    if (fside.mode() == Mode::ideal) throw std::invalid_argument("needs a polynomial or mapping f-side");
}

} // namespace

std::string to_string(const Bracket& b) { return "[" + b.lo.get_str() + ", " + b.hi.get_str() + "]"; }

Bracket to_bracket(const kernels::ResidueHistogram& h, std::uint64_t p, unsigned level, std::size_t n) {
    Bracket b{0, 0};
    const auto base = static_cast<std::int64_t>(level) * static_cast<std::int64_t>(n);
    for (std::size_t e = 0; e < h.exact.size(); ++e) {
        if (h.upper[e] == 0) continue;
        const mpq_class w = power(p, -(base + static_cast<std::int64_t>(e)));
        b.lo += w * mpz_class(static_cast<unsigned long>(h.exact[e]));
        b.hi += w * mpz_class(static_cast<unsigned long>(h.upper[e]));
    }
    return b;
}

Bracket truncated_integral(const FSide& fside, const Measure& g, std::uint64_t p, unsigned s0,
                           unsigned level) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return integrate(fside, g, full_domain(p, level, fside.nvars()), s0);
}

std::optional<IntVector> find_base_point(const FSide& fside, const IntegerPolynomial& g,
                                         std::uint64_t p) {
    require_function_mode(fside);
    const auto n = fside.nvars();
    const auto t = fside.t_count();
    std::vector<ModPolynomial> fs;
    for (const auto& f : fside.components().components) fs.push_back(reduce_mod_p(f, p));
    fs.push_back(reduce_mod_p(g, p));
    std::vector<kernels::CompiledPolynomial> values(fs.begin(), fs.end());
    auto hits = kernels::find_torus_points(n, p, 1, [&](auto a) {
        for (const auto& v : values)
            if (v(a) != 0) return false;
        return jacobian_rank_mod_p(fs, a, p) == t + 1;
    });
    if (hits.empty()) return std::nullopt;
    return IntVector(hits.front().begin(), hits.front().end());
}

mpq_class measure_A_kl(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                       std::uint64_t p, unsigned k, unsigned l) {
    require_function_mode(fside);
    const auto n = fside.nvars();
    const auto t = fside.t_count();
    if (k == 0 || l == 0) throw HypothesisError("k and l must be >= 1");
    if (fside.mode() == Mode::single && k < l) throw HypothesisError("the lemma needs k >= l");
    if (n < t + 1) throw HypothesisError("the lemma needs n >= t+1");
    const auto d = point_data(fside, g, a, p);
    if (!d.f_zero) throw HypothesisError("f-side does not vanish mod p at the base point");
    if (!d.g_zero) throw HypothesisError("g does not vanish mod p at the base point");
    if (d.pair_rank != t + 1)
        throw HypothesisError("stacked Jacobian has rank " + std::to_string(d.pair_rank) + ", not " +
                              std::to_string(t + 1));

    // Decode both orders from one histogram: with s0 = level+1 the bucket
    // e = (level+1) ord_f + ord_g determines each order (both <= level).
    const unsigned level = std::max(k, l);
    const auto modulus = modulus_for(p, level);
    auto fs = compile_fside(fside, modulus);
    kernels::CompiledPolynomial gc(g, modulus);
    auto h = kernels::integrate_residues(fs, &gc, coset_domain(p, level, a), level + 1);
    mpz_class count = 0;
    for (std::size_t e = 0; e < h.upper.size(); ++e) {
        const auto of = e / (level + 1), og = e % (level + 1);
        if (of >= k && og >= l) count += static_cast<unsigned long>(h.upper[e]);
    }
    return mpq_class(count) * power(p, -static_cast<std::int64_t>(level * n));
}

mpq_class lemma_value(std::uint64_t p, std::size_t n, std::size_t t, unsigned k, unsigned l) {
    const auto e = -static_cast<std::int64_t>(n) - (static_cast<std::int64_t>(k) - 1) * static_cast<std::int64_t>(t) -
                   static_cast<std::int64_t>(l) + 1;
    return power(p, e);
}

CosetCase coset_case(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                     std::uint64_t p) {
    require_function_mode(fside);
    const auto d = point_data(fside, g, a, p);
    return {d.f_zero, d.g_zero};
}

Bracket coset_integral(const FSide& fside, const IntegerPolynomial& g, const IntVector& a,
                       std::uint64_t p, unsigned s0, unsigned level) {
    require_function_mode(fside);
    const auto n = fside.nvars();
    const auto t = fside.t_count();
    const auto d = point_data(fside, g, a, p);
    if (d.f_zero && d.f_rank < std::min(t, n)) throw HypothesisError("f-side singular at the base point");
    if (d.g_zero && d.g_rank < 1) throw HypothesisError("g singular at the base point");
    if (d.f_zero && d.g_zero && d.pair_rank < std::min(t + 1, n))
        throw HypothesisError("stacked Jacobian not of maximal rank at the base point");
    return integrate(fside, g, coset_domain(p, level, a), s0);
}

mpq_class proposition_value(CosetCase c, std::uint64_t p, std::size_t n, std::size_t t, unsigned s0) {
    const mpq_class base = power(p, -static_cast<std::int64_t>(n));
    const auto ti = static_cast<std::int64_t>(t);
    const mpq_class pp(static_cast<unsigned long>(p));
    const mpq_class f_factor = (power(p, ti) - 1) / (power(p, static_cast<std::int64_t>(s0) + ti) - 1);
    mpq_class v = base;
    if (c.f_zero) v *= f_factor;
    if (c.g_zero) v /= pp + 1;
    return v;
}

Bracket torus_integral(const FSide& fside, const Measure& g, std::uint64_t p, unsigned s0,
                       unsigned level) {
    auto report = check_torus_hypotheses(fside.components(), g, p);
    if (!report.ok())
        throw HypothesisError("rank condition fails at a torus point (" + report.witnesses.front().condition + ")");
    return integrate(fside, g, torus_domain(p, level, fside.nvars()), s0);
}

mpq_class corollary_value(std::uint64_t N, std::uint64_t P, std::uint64_t Q, std::uint64_t p,
                          std::size_t n, std::size_t t, unsigned s0) {
    const mpq_class pp(static_cast<unsigned long>(p));
    const mpq_class Nq(static_cast<unsigned long>(N)), Pq(static_cast<unsigned long>(P)),
        Qq(static_cast<unsigned long>(Q));
    const mpq_class ps = power(p, s0);
    const mpq_class torus = power(p - 1, static_cast<std::int64_t>(n));
    mpq_class inner;
    if (t == 1) {
        inner = torus - pp * Nq * (ps - 1) / (ps * pp - 1) - Pq * pp / (pp + 1) -
                pp * Qq * (ps * (pp + 1) - 2) / ((ps * pp - 1) * (pp + 1));
    } else {
        const auto ti = static_cast<std::int64_t>(t);
        const mpq_class pt = power(p, ti), pst = ps * pt;
        inner = torus - pt * Nq * (ps - 1) / (pst - 1) - Pq * pp / (pp + 1) -
                pp * Qq * (power(p, ti - 1) * (ps * (pp + 1) - 1) - 1) / ((pst - 1) * (pp + 1));
    }
    return power(p, -static_cast<std::int64_t>(n)) * inner;
}

} // namespace igusa
