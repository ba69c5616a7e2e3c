#include "igusa/fside.hpp"

#include <stdexcept>

namespace igusa {

std::string to_string(Mode mode) {
    switch (mode) {
    case Mode::ideal: return "ideal";
    case Mode::single: return "single";
    case Mode::mapping: return "mapping";
    }
    return "?";
}

Mode mode_from_string(const std::string& s) {
    if (s == "ideal") return Mode::ideal;
    if (s == "single") return Mode::single;
    if (s == "mapping") return Mode::mapping;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

FSide FSide::ideal(MonomialIdealSpec spec) {
    validate(spec);
    FSide out;
    out.mode_ = Mode::ideal;
    for (const auto& w : spec.generators)
        out.components_.components.push_back(IntegerPolynomial::monomial(w));
    out.ideal_ = std::move(spec);
    return out;
}

FSide FSide::single(IntegerPolynomial f) {
    validate_vanishing_at_origin(f, "f");
    FSide out;
    out.mode_ = Mode::single;
    out.components_.components.push_back(std::move(f));
    return out;
}

FSide FSide::mapping(PolynomialMapping ff) {
    validate(ff);
    FSide out;
    out.mode_ = Mode::mapping;
    out.components_ = std::move(ff);
    return out;
}

NewtonPolyhedron FSide::polyhedron() const {
    if (mode_ == Mode::ideal) return NewtonPolyhedron::of(ideal_);
    return NewtonPolyhedron::of(components_);
}

PolynomialMapping FSide::restrict_to(const Face& face) const {
    PolynomialMapping out;
    for (const auto& f : components_.components)
        out.components.push_back(restrict_to_support(f, face.touching));
    return out;
}

} // namespace igusa
