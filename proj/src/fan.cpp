#include "igusa/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

constexpr std::uint64_t kMaxParallelepipedBox = 50'000'000;

IntVector sum_of(const IntMatrix& rows, std::size_t n) {
    IntVector s(n, 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < n; ++i) s[i] += r[i];
    return s;
}

// Solves sum(lambda_j k_j) = x for a fixed independent basis by precomputed
// cofactors on a set of pivot columns.
class SpanSolver {
public:
    explicit SpanSolver(const IntMatrix& rays) : rays_(rays), r_(rays.size()) {
        n_ = r_ ? rays.front().size() : 0;
        if (r_ == 0) return;
        if (rank(rays) != r_) throw std::invalid_argument("rays are linearly dependent");
        cols_.resize(r_);
        std::iota(cols_.begin(), cols_.end(), 0);
        IntMatrix sub(r_, IntVector(r_));
        for (;;) {
            for (std::size_t j = 0; j < r_; ++j)
                for (std::size_t i = 0; i < r_; ++i) sub[j][i] = rays[i][cols_[j]];
            det_ = determinant(sub);
            if (det_ != 0) break;
            std::size_t k = r_;
            while (k > 0 && cols_[k - 1] == n_ - r_ + k - 1) --k;
            ++cols_[k - 1];
            for (std::size_t j = k; j < r_; ++j) cols_[j] = cols_[j - 1] + 1;
        }
        // cof_[i][j]: coefficient of x[cols_[j]] in det * lambda_i.
        cof_.assign(r_, std::vector<__int128>(r_));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) {
                IntMatrix m = sub;
                for (std::size_t jj = 0; jj < r_; ++jj) m[jj][i] = (jj == j) ? 1 : 0;
                mpz_class c = determinant(m);
                if (!c.fits_slong_p()) throw SizeGuardError("ray entries too large");
                cof_[i][j] = c.get_si();
            }
        if (!det_.fits_slong_p()) throw SizeGuardError("ray entries too large");
        den_ = det_.get_si();
    }

    // Numerators of lambda over den() (sign folded so den() > 0), or false
    // when x is outside the span.
    bool solve(std::span<const std::int64_t> x, std::vector<__int128>& lambda) const {
        lambda.assign(r_, 0);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) lambda[i] += cof_[i][j] * x[cols_[j]];
        if (den_ < 0)
            for (auto& l : lambda) l = -l;
        const __int128 d = den_ < 0 ? -den_ : den_;
        for (std::size_t c = 0; c < n_; ++c) {
            __int128 lhs = 0;
            for (std::size_t i = 0; i < r_; ++i) lhs += lambda[i] * rays_[i][c];
            if (lhs != d * x[c]) return false;
        }
        return true;
    }

    std::int64_t den() const { return den_ < 0 ? -den_ : den_; }

private:
    const IntMatrix& rays_;
    std::size_t r_, n_ = 0;
    std::vector<std::size_t> cols_;
    mpz_class det_;
    std::int64_t den_ = 1;
    std::vector<std::vector<__int128>> cof_;
};

// Orientation of (facet rays + x) inside the span, on fixed pivot columns.
int orientation(const IntMatrix& rays, const std::vector<std::size_t>& facet, const IntVector& x,
                const std::vector<std::size_t>& cols) {
    const std::size_t d = cols.size();
    IntMatrix m(d, IntVector(d));
    for (std::size_t i = 0; i < facet.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = rays[facet[i]][cols[j]];
    for (std::size_t j = 0; j < d; ++j) m[d - 1][j] = x[cols[j]];
    return sgn(determinant(m));
}

std::vector<std::size_t> pivot_columns(const IntMatrix& basis) {
    const std::size_t r = basis.size(), n = basis.front().size();
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    IntMatrix sub(r, IntVector(r));
    for (;;) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = basis[i][cols[j]];
        if (determinant(sub) != 0) return cols;
        std::size_t k = r;
        while (k > 0 && cols[k - 1] == n - r + k - 1) --k;
        if (k == 0) throw ConsistencyError("pivot_columns: dependent basis");
        ++cols[k - 1];
        for (std::size_t j = k; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
}

using Simplex = std::vector<std::size_t>;

// Facets (size d-1 subsets) of the triangulation that belong to exactly one
// maximal simplex, with the owner's opposite vertex.
std::map<Simplex, std::size_t> boundary_facets(const std::vector<Simplex>& simplices) {
    std::map<Simplex, std::pair<int, std::size_t>> count;
    for (const auto& s : simplices)
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            auto& [c, v] = count[f];
            ++c;
            v = s[drop];
        }
    std::map<Simplex, std::size_t> out;
    for (auto& [f, cv] : count)
        if (cv.first == 1) out.emplace(f, cv.second);
    return out;
}

std::vector<Simplex> placing_triangulation(const IntMatrix& rays) {
    const std::size_t n = rays.front().size();
    std::vector<Simplex> simplices{Simplex{}};
    IntMatrix basis;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        IntMatrix trial = basis;
        trial.push_back(rays[i]);
        if (rank(trial) > basis.size()) {
            for (auto& s : simplices) s.push_back(i);
            basis = std::move(trial);
            cols = pivot_columns(basis);
            continue;
        }
        std::vector<Simplex> added;
        for (const auto& [facet, opposite] : boundary_facets(simplices)) {
            int side_opposite = orientation(rays, facet, rays[opposite], cols);
            int side_new = orientation(rays, facet, rays[i], cols);
            if (side_opposite * side_new < 0) {
                Simplex s = facet;
                s.push_back(i);
                std::sort(s.begin(), s.end());
                added.push_back(std::move(s));
            }
        }
        if (added.empty())
            throw std::invalid_argument("ray " + std::to_string(i) +
                                        " lies inside the cone of the previous rays");
        simplices.insert(simplices.end(), added.begin(), added.end());
    }
    (void)n;
    return simplices;
}

} // namespace

bool ray_order_less(const IntVector& a, const IntVector& b) {
    // Compare a/sigma(a) and b/sigma(b) lexicographically, larger first.
    __int128 sa = 0, sb = 0;
    for (auto v : a) sa += v;
    for (auto v : b) sb += v;
    for (std::size_t i = 0; i < a.size(); ++i) {
        __int128 lhs = static_cast<__int128>(a[i]) * sb, rhs = static_cast<__int128>(b[i]) * sa;
        if (lhs != rhs) return lhs > rhs;
    }
    return a > b;
}

namespace {

void finalize_order(ConePartition& part) {
    std::sort(part.rays.begin(), part.rays.end(), ray_order_less);
    std::map<IntVector, std::size_t> index;
    for (std::size_t i = 0; i < part.rays.size(); ++i) index[part.rays[i]] = i;
    for (auto& c : part.cones) {
        c.ray_ids.clear();
        for (const auto& r : c.rays) c.ray_ids.push_back(index.at(r));
        std::sort(c.ray_ids.begin(), c.ray_ids.end());
        c.rays.clear();
        for (auto id : c.ray_ids) c.rays.push_back(part.rays[id]);
    }
    std::sort(part.cones.begin(), part.cones.end(),
              [](const RationalCone& a, const RationalCone& b) { return a.ray_ids < b.ray_ids; });
}

} // namespace

ConePartition partition_single(const NewtonPolyhedron& gamma) {
    const std::size_t n = gamma.dimension();
    const auto& facets = gamma.facets();
    ConePartition part;
    part.n = n;
    part.kind = PartitionKind::single;
    part.polyhedra.push_back(gamma);
    for (const auto& f : facets) part.rays.push_back(f.normal);

    auto cone_of = [&](const std::vector<std::size_t>& ids) {
        IntMatrix rows;
        for (auto i : ids) rows.push_back(facets[i].normal);
        return rows;
    };
    auto closure = [&](const std::vector<std::size_t>& ids) {
        auto face = gamma.first_meet_locus(sum_of(cone_of(ids), n));
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (NewtonPolyhedron::facet_contains(facets[i], face)) out.push_back(i);
        return std::make_pair(out, face);
    };

    // Every face is the intersection of the facets containing it; grow facet
    // sets one facet at a time and close them up.
    std::map<std::vector<std::size_t>, Face> found;
    std::vector<std::vector<std::size_t>> queue;
    {
        auto [ids, face] = closure({});
        found.emplace(ids, face);
        queue.push_back(ids);
    }
    while (!queue.empty()) {
        auto ids = std::move(queue.back());
        queue.pop_back();
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (std::binary_search(ids.begin(), ids.end(), j)) continue;
            auto grown = ids;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
            auto [closed, face] = closure(grown);
            if (found.emplace(closed, face).second) queue.push_back(closed);
        }
    }

    for (auto& [ids, face] : found) {
        RationalCone cone;
        cone.rays = cone_of(ids);
        cone.dim = cone.rays.empty() ? 0 : static_cast<std::int64_t>(rank(cone.rays));
        if (cone.dim + face.dim != static_cast<std::int64_t>(n))
            throw ConsistencyError("cone dimension does not complement face dimension");
        cone.labels.tau = face;
        part.cones.push_back(std::move(cone));
    }
    finalize_order(part);
    return part;
}

ConePartition partition_pair(const NewtonPolyhedron& first, const NewtonPolyhedron& second) {
    if (first.dimension() != second.dimension())
        throw std::invalid_argument("partition_pair: dimension mismatch");
    const std::size_t n = first.dimension();
    auto part = partition_single(NewtonPolyhedron::minkowski_sum(first, second));
    part.kind = PartitionKind::pair;
    part.polyhedra = {first, second};
    for (auto& cone : part.cones) {
        auto witness = sum_of(cone.rays, n);
        cone.labels.tau = first.first_meet_locus(witness);
        cone.labels.tau_prime = second.first_meet_locus(witness);
    }
    return part;
}

std::size_t classify(const ConePartition& partition, std::span<const std::int64_t> k) {
    ConeLabels labels;
    labels.tau = partition.polyhedra.at(0).first_meet_locus(k);
    if (partition.kind == PartitionKind::pair)
        labels.tau_prime = partition.polyhedra.at(1).first_meet_locus(k);
    for (std::size_t i = 0; i < partition.cones.size(); ++i)
        if (partition.cones[i].labels == labels) return i;
    throw ConsistencyError("classify: no cone carries the labels of this weight");
}

std::int64_t multiplicity(const IntMatrix& rays) {
    auto idx = lattice_index(rays);
    if (!idx.fits_slong_p()) throw SizeGuardError("multiplicity exceeds 64-bit range");
    return idx.get_si();
}

std::vector<ParallelepipedPoint> parallelepiped_points_with_coordinates(const IntMatrix& rays) {
    std::vector<ParallelepipedPoint> out;
    if (rays.empty()) return out;
    const std::size_t n = rays.front().size();
    SpanSolver solver(rays);
    IntVector lo(n, 0), hi(n, 0);
    std::uint64_t volume = 1;
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& r : rays) (r[c] < 0 ? lo[c] : hi[c]) += r[c];
        auto width = static_cast<std::uint64_t>(hi[c] - lo[c] + 1);
        if (volume > kMaxParallelepipedBox / width)
            throw SizeGuardError("parallelepiped search box too large");
        volume *= width;
    }
    const __int128 den = solver.den();
    IntVector x = lo;
    std::vector<__int128> lambda;
    for (;;) {
        if (solver.solve(x, lambda) &&
            std::all_of(lambda.begin(), lambda.end(), [&](auto l) { return l >= 0 && l < den; })) {
            ParallelepipedPoint pt;
            pt.point = x;
            for (auto l : lambda) pt.coords.numerators.emplace_back(static_cast<long>(l));
            pt.coords.denominator = static_cast<long>(den);
            out.push_back(std::move(pt));
        }
        std::size_t c = 0;
        while (c < n && x[c] == hi[c]) x[c] = lo[c], ++c;
        if (c == n) break;
        ++x[c];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto sa = degree(a.point), sb = degree(b.point);
        return sa != sb ? sa < sb : a.point < b.point;
    });
    return out;
}

IntMatrix parallelepiped_points(const IntMatrix& rays) {
    IntMatrix out;
    if (rays.empty()) return out;
    for (auto& p : parallelepiped_points_with_coordinates(rays)) out.push_back(std::move(p.point));
    return out;
}

bool in_open_simplicial_cone(const IntMatrix& rays, std::span<const std::int64_t> k) {
    if (rays.empty()) return std::all_of(k.begin(), k.end(), [](auto v) { return v == 0; });
    SpanSolver solver(rays);
    std::vector<__int128> lambda;
    if (!solver.solve(k, lambda)) return false;
    return std::all_of(lambda.begin(), lambda.end(), [](auto l) { return l > 0; });
}

std::vector<SimplicialPiece> simplicial_decompose(const IntMatrix& rays) {
    if (rays.empty()) throw std::invalid_argument("simplicial_decompose needs a cone of dim >= 1");
    auto simplices = placing_triangulation(rays);
    auto boundary = boundary_facets(simplices);

    std::set<Simplex> faces;
    for (const auto& s : simplices) {
        const std::size_t d = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1) f.push_back(s[i]);
            faces.insert(std::move(f));
        }
    }
    std::vector<SimplicialPiece> pieces;
    for (const auto& f : faces) {
        bool on_boundary = std::any_of(boundary.begin(), boundary.end(), [&](const auto& b) {
            return std::includes(b.first.begin(), b.first.end(), f.begin(), f.end());
        });
        if (on_boundary) continue;
        SimplicialPiece piece;
        for (auto i : f) piece.rays.push_back(rays[i]);
        piece.mult = multiplicity(piece.rays);
        piece.pp_points = parallelepiped_points(piece.rays);
        if (static_cast<std::int64_t>(piece.pp_points.size()) != piece.mult)
            throw ConsistencyError("parallelepiped point count differs from multiplicity");
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::vector<SimplicialPiece> simplicial_decompose(const RationalCone& cone) {
    return simplicial_decompose(cone.rays);
}

} // namespace igusa
