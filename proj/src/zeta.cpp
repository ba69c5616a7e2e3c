#include "igusa/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"

namespace igusa {

namespace {

std::string vector_string(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string exponent_string(std::int64_t a, std::int64_t b) {
    std::string e;
    if (a != 0) e = (a == 1 ? "" : std::to_string(a)) + "s";
    if (b != 0) {
        if (!e.empty() && b > 0) e += "+";
        e += std::to_string(b);
    }
    return e;
}

std::string power_string(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) return "1";
    if (a == 0 && b == 1) return "p";
    return "p^{" + exponent_string(a, b) + "}";
}

// (p-1)^n - P p/(p+1), the part of L shared by all three modes.
mpq_class torus_part(const CountTriple& c, std::uint64_t p, std::size_t n) {
    mpq_class pp(static_cast<unsigned long>(p));
    return power(p - 1, static_cast<std::int64_t>(n)) -
           mpq_class(static_cast<unsigned long>(c.P)) * pp / (pp + 1);
}

void merge(DegeneracyReport& into, const DegeneracyReport& from, const std::string& prefix) {
    for (const auto& w : from.witnesses) into.witnesses.push_back({prefix + w.where, w.point, w.condition});
}

DegeneracyReport hypotheses(const FSide& fside, const Measure& g, std::uint64_t p,
                            const ConePartition& partition) {
    DegeneracyReport report;
    if (fside.mode() == Mode::single)
        merge(report, check_nondegenerate_single(fside.components().components.front(), p), "f: ");
    if (fside.mode() == Mode::mapping)
        merge(report, check_strong_nondegenerate(fside.components(), p), "f-side: ");
    if (g) {
        merge(report, check_nondegenerate_single(*g, p), "g: ");
        merge(report, check_pair_nondegenerate(fside, *g, partition, p), "pair: ");
    }
    return report;
}

void check_inputs(const FSide& fside, const Measure& g, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (!g) return;
    validate_vanishing_at_origin(*g, "g");
    if (g->nvars() != fside.nvars()) throw std::invalid_argument("f-side and g use different variable counts");
    const auto n = fside.nvars();
    const auto t = fside.t_count();
    if (fside.mode() != Mode::ideal && n < t + 1)
        throw HypothesisError("the formula with a measure needs n >= " + std::to_string(t + 1) +
                              " (n = " + std::to_string(n) + ")");
}

} // namespace

Weights::Weights(NewtonPolyhedron fside, std::optional<NewtonPolyhedron> g)
    : f_(std::move(fside)), g_(std::move(g)) {}

std::int64_t Weights::m_g(std::span<const std::int64_t> k) const { return g_ ? g_->m_value(k) : 0; }

std::int64_t Weights::sigma(std::span<const std::int64_t> k) {
    return std::accumulate(k.begin(), k.end(), std::int64_t{0});
}

ExpFactor Weights::exponent(std::span<const std::int64_t> k) const { return {m_f(k), m_g(k) + sigma(k)}; }

FactoredForm SDelta::factored(std::uint64_t p) const {
    FactoredForm total;
    total.p = p;
    for (const auto& piece : pieces) {
        FactoredForm f;
        f.p = p;
        for (const auto& [a, b] : piece.numerator) add_term(f.numerator, -a, power(p, b));
        f.factors = piece.factors;
        std::sort(f.factors.begin(), f.factors.end());
        total = total + f;
    }
    return total;
}

std::string to_string(const SDelta& s) {
    std::string out;
    for (const auto& piece : s.pieces) {
        std::string num;
        for (const auto& [a, b] : piece.numerator) num += (num.empty() ? "" : "+") + power_string(a, b);
        if (piece.numerator.size() > 1 && !piece.factors.empty()) num = "(" + num + ")";
        std::string den;
        for (const auto& f : piece.factors) den += "(" + power_string(f.a, f.b) + "-1)";
        if (!out.empty()) out += " + ";
        out += den.empty() ? num : num + "/" + (piece.factors.size() > 1 ? "(" + den + ")" : den);
    }
    return out;
}

SDelta s_delta(const RationalCone& cone, const Weights& w) {
    SDelta out;
    if (cone.dim == 0) {
        SPiece zero;
        zero.numerator.push_back({0, 0});
        out.pieces.push_back(std::move(zero));
        return out;
    }
    for (auto& piece : simplicial_decompose(cone)) {
        SPiece sp;
        std::vector<ExpFactor> ray_exp;
        for (const auto& k : piece.rays) ray_exp.push_back(w.exponent(k));
        for (const auto& pt : parallelepiped_points_with_coordinates(piece.rays)) {
            auto e = w.exponent(pt.point);
            // A(h) must be the same combination of the A(k_j) as h of the k_j.
            mpz_class fa = 0, fb = 0;
            for (std::size_t j = 0; j < ray_exp.size(); ++j) {
                fa += pt.coords.numerators[j] * ray_exp[j].a;
                fb += pt.coords.numerators[j] * ray_exp[j].b;
            }
            if (fa != pt.coords.denominator * e.a || fb != pt.coords.denominator * e.b)
                throw ConsistencyError("weights not linear on the cone at " + vector_string(pt.point));
            sp.numerator.push_back({e.a, e.b});
            sp.pp_points.push_back(pt.point);
        }
        sp.factors = std::move(ray_exp);
        sp.rays = std::move(piece.rays);
        sp.mult = piece.mult;
        out.pieces.push_back(std::move(sp));
    }
    return out;
}

FactoredForm l_delta_ideal(const CountTriple& c, std::uint64_t p, std::size_t n) {
    return FactoredForm::constant(p, power(p, -static_cast<std::int64_t>(n)) * torus_part(c, p, n));
}

FactoredForm l_delta_single(const CountTriple& c, std::uint64_t p, std::size_t n) {
    const mpq_class scale = power(p, -static_cast<std::int64_t>(n));
    const mpq_class C = torus_part(c, p, n);
    if (c.N == 0 && c.Q == 0) return FactoredForm::constant(p, scale * C);
    const mpq_class pp(static_cast<unsigned long>(p));
    const mpq_class N(static_cast<unsigned long>(c.N)), Q(static_cast<unsigned long>(c.Q));
    FactoredForm out;
    out.p = p;
    out.factors = {{1, 1}};
    // C (p t^-1 - 1) - pN (t^-1 - 1) - pQ ((p+1) t^-1 - 2) / (p+1)
    add_term(out.numerator, -1, scale * (C * pp - pp * N - pp * Q));
    add_term(out.numerator, 0, scale * (-C + pp * N + 2 * pp * Q / (pp + 1)));
    return out;
}

FactoredForm l_delta_mapping(const CountTriple& c, std::uint64_t p, std::size_t n, std::size_t t) {
    if (t == 0) throw std::invalid_argument("mapping needs at least one component");
    const mpq_class scale = power(p, -static_cast<std::int64_t>(n));
    const mpq_class C = torus_part(c, p, n);
    if (c.N == 0 && c.Q == 0) return FactoredForm::constant(p, scale * C);
    const auto ti = static_cast<std::int64_t>(t);
    const mpq_class pp(static_cast<unsigned long>(p));
    const mpq_class pt = power(p, ti), pt1 = power(p, ti - 1);
    const mpq_class N(static_cast<unsigned long>(c.N)), Q(static_cast<unsigned long>(c.Q));
    FactoredForm out;
    out.p = p;
    out.factors = {{1, ti}};
    // C (p^t t^-1 - 1) - p^t N (t^-1 - 1) - pQ (p^{t-1}((p+1) t^-1 - 1) - 1) / (p+1)
    add_term(out.numerator, -1, scale * (C * pt - pt * N - pp * Q * pt1));
    add_term(out.numerator, 0, scale * (-C + pt * N + pp * Q * (pt1 + 1) / (pp + 1)));
    return out;
}

ConePartition formula_partition(const FSide& fside, const Measure& g) {
    if (g) return partition_pair(fside.polyhedron(), NewtonPolyhedron::of(*g));
    return partition_single(fside.polyhedron());
}

DegeneracyReport check_hypotheses(const FSide& fside, const Measure& g, std::uint64_t p) {
    check_inputs(fside, g, p);
    return hypotheses(fside, g, p, formula_partition(fside, g));
}

std::vector<CandidatePole> candidate_poles(const ConePartition& partition, const Weights& w,
                                           Mode mode, std::size_t t_count) {
    std::vector<CandidatePole> out;
    auto add = [&](const mpq_class& v, const std::string& source) {
        for (auto& c : out)
            if (c.value == v) {
                c.sources.push_back(source);
                return;
            }
        out.push_back({v, {source}});
    };
    for (const auto& k : partition.rays) {
        const auto mf = w.m_f(k);
        if (mf == 0) continue;
        add(mpq_class(-(w.m_g(k) + Weights::sigma(k)), mf), "ray " + vector_string(k));
    }
    if (mode != Mode::ideal) {
        const auto t = static_cast<long>(t_count);
        add(mpq_class(-t), "L-factor p^{" + exponent_string(1, t) + "}-1");
    }
    for (auto& c : out) c.value.canonicalize();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    return out;
}

ZetaResult assemble(const FSide& fside, const Measure& g, std::uint64_t p, const ZetaOptions& options) {
    check_inputs(fside, g, p);
    ZetaResult r;
    r.mode = fside.mode();
    r.p = p;
    r.n = fside.nvars();
    r.t_count = fside.t_count();
    r.trivial_measure = !g.has_value();
    r.partition = formula_partition(fside, g);
    r.degeneracy = hypotheses(fside, g, p, r.partition);
    if (!r.degeneracy.ok()) {
        if (!options.override_degenerate)
            throw DegenerateInputError("non-degeneracy fails at p = " + std::to_string(p), r.degeneracy);
        r.hypotheses_verified = false;
        r.notes.push_back("unverified hypothesis: non-degeneracy fails at p = " + std::to_string(p) +
                          "; the formula was applied anyway");
    }

    Weights w(fside.polyhedron(), g ? std::optional(NewtonPolyhedron::of(*g)) : std::nullopt);
    for (const auto& k : r.partition.rays) {
        RayRow row{k, w.m_f(k), w.m_g(k), Weights::sigma(k), std::nullopt};
        if (row.m_f != 0) row.pole = mpq_class(-(row.m_g + row.sigma), row.m_f);
        if (row.pole) row.pole->canonicalize();
        r.rays.push_back(std::move(row));
    }

    r.factored = FactoredForm::constant(p, 0);
    std::set<IntVector> seen;
    for (const auto& cone : r.partition.cones) {
        ConeTerm term;
        term.cone = cone;
        Measure gd;
        if (g) gd = restrict_to_support(*g, cone.labels.tau_prime->touching);
        term.counts = count_triple(fside.restrict_to(cone.labels.tau), gd, p);
        switch (r.mode) {
        case Mode::ideal: term.L = l_delta_ideal(term.counts, p, r.n); break;
        case Mode::single: term.L = l_delta_single(term.counts, p, r.n); break;
        case Mode::mapping: term.L = l_delta_mapping(term.counts, p, r.n, r.t_count); break;
        }
        term.S = s_delta(cone, w);
        for (const auto& piece : term.S.pieces)
            for (const auto& h : piece.pp_points)
                if (Weights::sigma(h) != 0 && seen.insert(h).second)
                    r.extra_points.push_back({h, w.m_f(h), w.m_g(h), Weights::sigma(h), std::nullopt});
        r.factored = r.factored + term.L * term.S.factored(p);
        r.cones.push_back(std::move(term));
    }
    r.reduced = r.factored.expand();
    if (!r.reduced.is_zero() && r.reduced.den().coeff(0) == 0)
        throw ConsistencyError("assembled zeta function has a pole at t = 0");

    r.poles = candidate_poles(r.partition, w, r.mode, r.t_count);
    auto notes = pole_notes(r.mode, r.t_count);
    r.notes.insert(r.notes.end(), notes.begin(), notes.end());
    return r;
}

std::vector<std::string> pole_notes(Mode mode, std::size_t t_count) {
    if (mode != Mode::mapping || t_count < 2) return {};
    return {"-1 is often quoted as a candidate real part for mappings, but the L-factor p^{s+t}-1 vanishes at "
            "Re(s) = -" + std::to_string(t_count) + "; the factor-derived value is reported"};
}

mpq_class evaluate_at(const RationalFunction& z, const mpq_class& t) { return z.evaluate(t); }

std::string to_string(const FactoredForm& f) {
    std::string num;
    for (auto it = f.numerator.rbegin(); it != f.numerator.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = abs(c);
        std::string term = a.get_str();
        if (e != 0) term += "*t^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        if (num.empty())
            num = (c < 0 ? "-" : "") + term;
        else
            num += (c < 0 ? " - " : " + ") + term;
    }
    if (num.empty()) num = "0";
    if (f.factors.empty()) return num;
    std::string den;
    for (const auto& x : f.factors) den += "(" + to_string(x) + ")";
    return "(" + num + ")/" + den;
}

} // namespace igusa
