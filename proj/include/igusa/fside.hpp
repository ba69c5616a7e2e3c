#pragma once

#include <optional>
#include <string>

#include "igusa/newton.hpp"
#include "igusa/polynomial.hpp"

namespace igusa {

enum class Mode { ideal, single, mapping };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// The object raised to the power s: a monomial ideal, one polynomial, or a
/// polynomial mapping. All three are carried as a list of component
/// polynomials, since |I(x)| and ||f(x)|| are both the maximum of the
/// component norms; an ideal's components are its monic generators.
class FSide {
public:
    static FSide ideal(MonomialIdealSpec spec);
    static FSide single(IntegerPolynomial f);
    static FSide mapping(PolynomialMapping ff);

    Mode mode() const { return mode_; }
    std::size_t nvars() const { return components_.nvars(); }
    // Number of mapping components entering the local factor (1 for single).
    std::size_t t_count() const { return components_.size(); }
    const PolynomialMapping& components() const { return components_; }
    const MonomialIdealSpec& ideal_spec() const { return ideal_; }

    NewtonPolyhedron polyhedron() const;
    // Components restricted to a face of polyhedron().
    PolynomialMapping restrict_to(const Face& face) const;

private:
    Mode mode_ = Mode::single;
    PolynomialMapping components_;
    MonomialIdealSpec ideal_;
};

// The measure polynomial g, or nullopt for the trivial measure |dx|.
using Measure = std::optional<IntegerPolynomial>;

} // namespace igusa
