#include "igusa/counting.hpp"

#include <stdexcept>

#include "igusa/kernels.hpp"
#include "igusa/linalg.hpp"
#include "igusa/modular.hpp"

namespace igusa {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::vector<kernels::CompiledPolynomial> compile(const PolynomialMapping& ff, std::uint64_t p) {
    std::vector<kernels::CompiledPolynomial> out;
    for (const auto& f : ff.components) out.emplace_back(f, p);
    return out;
}

CountTriple to_triple(const kernels::TorusCounts& c) { return {c.f_only, c.g_only, c.both}; }

std::size_t nvars_of(const PolynomialMapping& fside, const Measure& g) {
    if (!fside.components.empty()) return fside.nvars();
    if (g) return g->nvars();
    throw std::invalid_argument("count_triple needs an f-side or a measure");
}

// Per-polynomial data for torus scans: value and gradient over F_p.
struct ModSystem {
    std::uint64_t p;
    std::vector<ModPolynomial> polys;
    std::vector<kernels::CompiledPolynomial> values;
    std::vector<std::vector<kernels::CompiledPolynomial>> gradients;

    ModSystem(const std::vector<IntegerPolynomial>& fs, std::uint64_t prime) : p(prime) {
        for (const auto& f : fs) add(reduce_mod_p(f, p));
    }

    void add(ModPolynomial f) {
        values.emplace_back(f);
        std::vector<kernels::CompiledPolynomial> grad;
        for (std::size_t j = 0; j < f.nvars; ++j) grad.emplace_back(partial_derivative(f, j));
        gradients.push_back(std::move(grad));
        polys.push_back(std::move(f));
    }

    std::size_t jacobian_rank(std::span<const std::uint64_t> a) const {
        std::vector<std::vector<std::uint64_t>> rows;
        for (const auto& grad : gradients) {
            std::vector<std::uint64_t> row;
            for (const auto& d : grad) row.push_back(d(a));
            rows.push_back(std::move(row));
        }
        return rank_mod_p(rows, p);
    }

    bool all_vanish(std::span<const std::uint64_t> a) const {
        for (const auto& v : values)
            if (v(a) != 0) return false;
        return !values.empty();
    }
};

IntVector to_point(const std::vector<std::uint64_t>& a) { return {a.begin(), a.end()}; }

void append(DegeneracyReport& report, const std::string& where, const std::string& condition,
            const std::vector<std::vector<std::uint64_t>>& points) {
    for (const auto& a : points) {
        if (report.witnesses.size() >= kMaxWitnesses) return;
        report.witnesses.push_back({where, to_point(a), condition});
    }
}

std::string describe(const Face& f) { return "face " + to_string(f); }

// Faces of a polyhedron, one per cone of its partition.
std::vector<Face> faces_of(const NewtonPolyhedron& gamma) {
    std::vector<Face> out;
    for (const auto& cone : partition_single(gamma).cones) out.push_back(cone.labels.tau);
    return out;
}

} // namespace

std::size_t jacobian_rank_mod_p(const std::vector<ModPolynomial>& polys,
                                std::span<const std::uint64_t> a, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& f : polys) {
        std::vector<std::uint64_t> row(f.nvars);
        for (std::size_t j = 0; j < f.nvars; ++j) row[j] = evaluate_mod(partial_derivative(f, j), a);
        rows.push_back(std::move(row));
    }
    return rank_mod_p(rows, p);
}

CountTriple count_triple(const PolynomialMapping& fside, const Measure& g, std::uint64_t p) {
    require_prime(p);
    const auto n = nvars_of(fside, g);
    auto fs = compile(fside, p);
    std::optional<kernels::CompiledPolynomial> gc;
    if (g) gc.emplace(*g, p);
    return to_triple(kernels::torus_zero_counts(fs, gc ? &*gc : nullptr, n, p));
}

CountTriple count_triple_serial(const PolynomialMapping& fside, const Measure& g, std::uint64_t p) {
    require_prime(p);
    const auto n = nvars_of(fside, g);
    auto fs = compile(fside, p);
    std::optional<kernels::CompiledPolynomial> gc;
    if (g) gc.emplace(*g, p);
    return to_triple(kernels::serial::torus_zero_counts(fs, gc ? &*gc : nullptr, n, p));
}

DegeneracyReport check_nondegenerate_single(const IntegerPolynomial& f, std::uint64_t p) {
    require_prime(p);
    validate_vanishing_at_origin(f, "f");
    const auto n = f.nvars();
    DegeneracyReport report;
    for (const auto& face : faces_of(NewtonPolyhedron::of(f))) {
        auto ft = reduce_mod_p(restrict_to_support(f, face.touching), p);
        kernels::CompiledPolynomial value(ft);
        std::vector<kernels::CompiledPolynomial> partials;
        for (std::size_t i = 0; i < n; ++i) partials.emplace_back(partial_derivative(ft, i));
        auto hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
            if (value(a) != 0) return false;
            for (const auto& d : partials)
                if (d(a) != 0) return false;
            return true;
        });
        append(report, describe(face), "face polynomial singular on the torus", hits);
    }
    return report;
}

DegeneracyReport check_strong_nondegenerate(const PolynomialMapping& ff, std::uint64_t p) {
    require_prime(p);
    validate(ff);
    const auto n = ff.nvars();
    const auto full = std::min(ff.size(), n);
    DegeneracyReport report;
    for (const auto& face : faces_of(NewtonPolyhedron::of(ff))) {
        std::vector<IntegerPolynomial> restricted;
        for (const auto& f : ff.components) restricted.push_back(restrict_to_support(f, face.touching));
        ModSystem sys(restricted, p);
        auto hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
            return sys.all_vanish(a) && sys.jacobian_rank(a) < full;
        });
        append(report, describe(face),
               "Jacobian rank below " + std::to_string(full) + " at a common zero", hits);
    }
    return report;
}

DegeneracyReport check_pair_nondegenerate(const FSide& fside, const IntegerPolynomial& g,
                                          const ConePartition& partition, std::uint64_t p) {
    require_prime(p);
    const auto n = g.nvars();
    if (partition.kind != PartitionKind::pair || partition.n != n)
        throw std::invalid_argument("check_pair_nondegenerate needs the pair partition");
    DegeneracyReport report;
    // Monomials never vanish on the torus.
    if (fside.mode() == Mode::ideal) return report;
    const auto t = fside.t_count();
    if (n < t + 1)
        throw std::invalid_argument("pair condition needs n >= t+1 (n=" + std::to_string(n) +
                                    ", t=" + std::to_string(t) + ")");
    for (std::size_t c = 0; c < partition.cones.size(); ++c) {
        const auto& cone = partition.cones[c];
        auto fr = fside.restrict_to(cone.labels.tau);
        auto gr = restrict_to_support(g, cone.labels.tau_prime->touching);
        ModSystem fsys(fr.components, p);
        ModSystem stacked = fsys;
        stacked.add(reduce_mod_p(gr, p));
        const auto& gval = stacked.values.back();
        auto hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
            return fsys.all_vanish(a) && gval(a) == 0 && stacked.jacobian_rank(a) < t + 1;
        });
        append(report, "cone " + std::to_string(c),
               "stacked Jacobian rank below " + std::to_string(t + 1) + " at a common zero", hits);
    }
    return report;
}

DegeneracyReport check_torus_hypotheses(const PolynomialMapping& fside, const Measure& g,
                                        std::uint64_t p) {
    require_prime(p);
    const auto n = nvars_of(fside, g);
    DegeneracyReport report;
    ModSystem fsys(fside.components, p);
    const auto t = fside.size();
    if (t > 0) {
        const auto full = std::min(t, n);
        auto hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
            return fsys.all_vanish(a) && fsys.jacobian_rank(a) < full;
        });
        append(report, "f-side", "singular zero of the f-side", hits);
    }
    if (g) {
        ModSystem gsys({*g}, p);
        auto hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
            return gsys.all_vanish(a) && gsys.jacobian_rank(a) < 1;
        });
        append(report, "g", "singular zero of g", hits);
        if (t > 0) {
            ModSystem stacked = fsys;
            stacked.add(gsys.polys.front());
            const auto full = std::min(t + 1, n);
            auto pair_hits = kernels::find_torus_points(n, p, kMaxWitnesses, [&](auto a) {
                return fsys.all_vanish(a) && gsys.all_vanish(a) && stacked.jacobian_rank(a) < full;
            });
            append(report, "pair", "stacked Jacobian not of full rank at a common zero", pair_hits);
        }
    }
    return report;
}

} // namespace igusa
