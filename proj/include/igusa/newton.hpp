#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "igusa/polynomial.hpp"

namespace igusa {

/// A face of a Newton polyhedron, identified by the support points lying on
/// it (`touching`) and the coordinate directions along which it is unbounded
/// (`recession`, 0-based, sorted). Because the recession cone of every
/// Newton polyhedron is the whole orthant, this pair determines the face.
struct Face {
    std::vector<ExponentVector> touching; // sorted
    std::vector<std::size_t> recession;   // sorted
    std::int64_t dim = 0;

    friend bool operator==(const Face& a, const Face& b) {
        return a.touching == b.touching && a.recession == b.recession;
    }
    friend auto operator<=>(const Face& a, const Face& b) {
        if (auto c = a.touching <=> b.touching; c != 0) return c;
        return a.recession <=> b.recession;
    }
};

// Inequality k.x >= offset of a facet, with k primitive in N^n.
struct FacetInequality {
    IntVector normal;
    std::int64_t offset = 0;
};

/// conv(support) + R_+^n for a finite support avoiding the origin.
class NewtonPolyhedron {
public:
    NewtonPolyhedron(std::vector<ExponentVector> support);

    static NewtonPolyhedron of(const IntegerPolynomial& f);
    static NewtonPolyhedron of(const PolynomialMapping& ff);
    static NewtonPolyhedron of(const MonomialIdealSpec& ideal);
    // conv(A) + conv(B) + R_+^n, the polyhedron whose normal fan is the
    // common refinement of the fans of a and b.
    static NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& a, const NewtonPolyhedron& b);

    std::size_t dimension() const { return n_; }
    const std::vector<ExponentVector>& support() const { return support_; }

    std::int64_t m_value(std::span<const std::int64_t> k) const;
    Face first_meet_locus(std::span<const std::int64_t> k) const;
    Face whole() const;

    // Minimal inequality description, sorted by normal (descending).
    const std::vector<FacetInequality>& facets() const { return facets_; }

    // Does the closed facet with this inequality contain `face`?
    static bool facet_contains(const FacetInequality& facet, const Face& face);

    // Membership of an integer point, decided from the facet inequalities.
    bool contains(std::span<const std::int64_t> x) const;

private:
    void check_weight(std::span<const std::int64_t> k) const;
    std::vector<FacetInequality> compute_facets() const;

    std::size_t n_;
    std::vector<ExponentVector> support_;
    std::vector<FacetInequality> facets_;
};

std::int64_t face_dimension(const Face& face, std::size_t n);

std::vector<FacetInequality> facet_normals(const NewtonPolyhedron& gamma);

// Terms of f whose exponents lie on `face`; `face` must be a face of Γ_f.
IntegerPolynomial face_restriction(const IntegerPolynomial& f, const Face& face);
PolynomialMapping face_restriction(const PolynomialMapping& ff, const Face& face);

std::string to_string(const Face& face);

} // namespace igusa
