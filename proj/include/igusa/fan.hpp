#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "igusa/linalg.hpp"
#include "igusa/newton.hpp"

namespace igusa {

// Faces associated with a cone: one face for a single partition, the pair
// (tau, tau') of first meet loci for a pair partition.
struct ConeLabels {
    Face tau;
    std::optional<Face> tau_prime;

    friend bool operator==(const ConeLabels&, const ConeLabels&) = default;
};

/// Relatively open cone strictly positively spanned by primitive rays. The
/// zero cone has no rays.
struct RationalCone {
    IntMatrix rays;
    std::int64_t dim = 0;
    ConeLabels labels;
    // Indices of `rays` in the owning partition's ray list.
    std::vector<std::size_t> ray_ids;
};

enum class PartitionKind { single, pair };

struct ConePartition {
    std::size_t n = 0;
    PartitionKind kind = PartitionKind::single;
    IntMatrix rays; // all rays of the fan, in display order
    std::vector<RationalCone> cones;
    // The polyhedra whose first meet loci label the cones.
    std::vector<NewtonPolyhedron> polyhedra;
};

// Relatively open simplicial cone with its fundamental parallelepiped points.
struct SimplicialPiece {
    IntMatrix rays;
    std::int64_t mult = 1;
    IntMatrix pp_points;
};

// Display order for rays: lexicographically decreasing direction k/sigma(k).
bool ray_order_less(const IntVector& a, const IntVector& b);

ConePartition partition_single(const NewtonPolyhedron& gamma);
ConePartition partition_pair(const NewtonPolyhedron& first, const NewtonPolyhedron& second);

// Index into `partition.cones` of the cone whose relative interior holds k.
std::size_t classify(const ConePartition& partition, std::span<const std::int64_t> k);

// Placing triangulation over the rays in input order, split into disjoint
// relatively open simplicial pieces covering the open cone.
std::vector<SimplicialPiece> simplicial_decompose(const RationalCone& cone);
std::vector<SimplicialPiece> simplicial_decompose(const IntMatrix& rays);

std::int64_t multiplicity(const IntMatrix& rays);

// Integer points sum(lambda_j k_j) with 0 <= lambda_j < 1; the origin first.
IntMatrix parallelepiped_points(const IntMatrix& rays);

struct ParallelepipedPoint {
    IntVector point;
    RationalCoordinates coords; // lambda_j = numerators[j] / denominator
};
std::vector<ParallelepipedPoint> parallelepiped_points_with_coordinates(const IntMatrix& rays);

// Is k in the relative interior of the cone spanned by `rays` (a relatively
// open simplicial piece with independent rays)?
bool in_open_simplicial_cone(const IntMatrix& rays, std::span<const std::int64_t> k);

} // namespace igusa
