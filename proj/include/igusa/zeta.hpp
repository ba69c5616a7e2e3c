#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "igusa/counting.hpp"
#include "igusa/fan.hpp"
#include "igusa/fside.hpp"
#include "igusa/rational.hpp"

namespace igusa {

/// The weights entering S_delta: A(k) = m_f(k) s + m_g(k) + sigma(k).
class Weights {
public:
    Weights(NewtonPolyhedron fside, std::optional<NewtonPolyhedron> g);

    std::int64_t m_f(std::span<const std::int64_t> k) const { return f_.m_value(k); }
    // Zero for the trivial measure.
    std::int64_t m_g(std::span<const std::int64_t> k) const;
    static std::int64_t sigma(std::span<const std::int64_t> k);
    // p^{A(k)} - 1 as an ExpFactor.
    ExpFactor exponent(std::span<const std::int64_t> k) const;

private:
    NewtonPolyhedron f_;
    std::optional<NewtonPolyhedron> g_;
};

/// One simplicial piece of S_delta:
///   sum_h p^{a_h s + b_h} / prod_j (p^{a_j s + b_j} - 1).
struct SPiece {
    IntMatrix rays;
    std::int64_t mult = 1;
    IntMatrix pp_points;
    std::vector<std::pair<std::int64_t, std::int64_t>> numerator; // (a_h, b_h) per pp point
    std::vector<ExpFactor> factors;                               // one per ray
};

struct SDelta {
    std::vector<SPiece> pieces;
    FactoredForm factored(std::uint64_t p) const;
};

// Symbolic rendering in p and s, e.g. "(1+p^{8s+10})/((p^{11s+12}-1)(p^{5s+8}-1))".
std::string to_string(const SDelta& s);

// S_delta over the half-open simplicial pieces of `cone`. Checks that the
// weights are linear on each piece (ConsistencyError otherwise). The zero
// cone gives 1.
SDelta s_delta(const RationalCone& cone, const Weights& w);

FactoredForm l_delta_ideal(const CountTriple& c, std::uint64_t p, std::size_t n);
FactoredForm l_delta_single(const CountTriple& c, std::uint64_t p, std::size_t n);
FactoredForm l_delta_mapping(const CountTriple& c, std::uint64_t p, std::size_t n, std::size_t t);

struct CandidatePole {
    mpq_class value;
    std::vector<std::string> sources;
};

struct RayRow {
    IntVector k;
    std::int64_t m_f = 0, m_g = 0, sigma = 0;
    std::optional<mpq_class> pole; // absent when m_f(k) = 0
};

struct ConeTerm {
    RationalCone cone;
    CountTriple counts;
    FactoredForm L;
    SDelta S;
};

struct ZetaOptions {
    bool override_degenerate = false;
};

struct ZetaResult {
    Mode mode = Mode::single;
    std::uint64_t p = 2;
    std::size_t n = 0;
    std::size_t t_count = 1;
    bool trivial_measure = true;
    ConePartition partition;
    std::vector<RayRow> rays;
    std::vector<RayRow> extra_points; // nonzero parallelepiped points
    std::vector<ConeTerm> cones;
    FactoredForm factored;
    RationalFunction reduced;
    std::vector<CandidatePole> poles;
    DegeneracyReport degeneracy;
    bool hypotheses_verified = true;
    std::vector<std::string> notes;
};

/// A formula hypothesis fails at this prime; carries the witnesses.
class DegenerateInputError : public std::runtime_error {
public:
    DegenerateInputError(const std::string& what, DegeneracyReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const DegeneracyReport& report() const { return report_; }

private:
    DegeneracyReport report_;
};

// All non-degeneracy conditions the formula for this mode needs at p.
DegeneracyReport check_hypotheses(const FSide& fside, const Measure& g, std::uint64_t p);

// The cone partition the formula sums over: the pair partition when g is
// present, the f-side partition otherwise.
ConePartition formula_partition(const FSide& fside, const Measure& g);

ZetaResult assemble(const FSide& fside, const Measure& g, std::uint64_t p,
                    const ZetaOptions& options = {});

// Caveats attached to the candidate pole list.
std::vector<std::string> pole_notes(Mode mode, std::size_t t_count);

std::vector<CandidatePole> candidate_poles(const ConePartition& partition, const Weights& w,
                                           Mode mode, std::size_t t_count);

// Z at t = p^{-s}; throws std::domain_error at a pole.
mpq_class evaluate_at(const RationalFunction& z, const mpq_class& t);

std::string to_string(const FactoredForm& f);

} // namespace igusa
