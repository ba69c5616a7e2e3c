#include "igusa/newton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "igusa/errors.hpp"
#include "igusa/linalg.hpp"

namespace igusa {

namespace {

// Points of `pts` not dominated coordinatewise by another point. Dominated
// points lie in some w + R_+^n and never touch a bounded face alone.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool geq = true;
            for (std::size_t c = 0; c < pts[i].size() && geq; ++c) geq = pts[i][c] >= pts[j][c];
            dominated = geq;
        }
        if (!dominated) out.push_back(pts[i]);
    }
    return out;
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(std::vector<ExponentVector> support) {
    if (support.empty()) throw std::invalid_argument("Newton polyhedron needs a nonempty support");
    n_ = support.front().size();
    if (n_ == 0) throw std::invalid_argument("Newton polyhedron needs n >= 1");
    for (const auto& w : support) {
        if (w.size() != n_) throw std::invalid_argument("support points disagree on n");
        for (auto e : w)
            if (e < 0) throw std::invalid_argument("negative exponent in support");
        if (std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; }))
            throw std::invalid_argument("support must not contain the origin");
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    support_ = std::move(support);
    facets_ = compute_facets();
}

NewtonPolyhedron NewtonPolyhedron::of(const IntegerPolynomial& f) {
    validate_vanishing_at_origin(f, "polynomial");
    return NewtonPolyhedron(f.support());
}

NewtonPolyhedron NewtonPolyhedron::of(const PolynomialMapping& ff) {
    validate(ff);
    return NewtonPolyhedron(ff.support());
}

NewtonPolyhedron NewtonPolyhedron::of(const MonomialIdealSpec& ideal) {
    validate(ideal);
    return NewtonPolyhedron(ideal.generators);
}

NewtonPolyhedron NewtonPolyhedron::minkowski_sum(const NewtonPolyhedron& a,
                                                 const NewtonPolyhedron& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Minkowski sum: dimension mismatch");
    auto ma = minimal_elements(a.support_);
    auto mb = minimal_elements(b.support_);
    std::vector<ExponentVector> sums;
    sums.reserve(ma.size() * mb.size());
    for (const auto& x : ma)
        for (const auto& y : mb) {
            ExponentVector s(a.n_);
            for (std::size_t i = 0; i < a.n_; ++i) s[i] = x[i] + y[i];
            sums.push_back(std::move(s));
        }
    return NewtonPolyhedron(minimal_elements(std::move(sums)));
}

void NewtonPolyhedron::check_weight(std::span<const std::int64_t> k) const {
    if (k.size() != n_) throw std::invalid_argument("weight vector has wrong length");
    for (auto v : k)
        if (v < 0) throw std::invalid_argument("weight vector has a negative entry");
}

std::int64_t NewtonPolyhedron::m_value(std::span<const std::int64_t> k) const {
    check_weight(k);
    std::int64_t best = dot(k, support_.front());
    for (const auto& w : support_) best = std::min(best, dot(k, w));
    return best;
}

Face NewtonPolyhedron::first_meet_locus(std::span<const std::int64_t> k) const {
    const auto m = m_value(k);
    Face face;
    for (const auto& w : support_)
        if (dot(k, w) == m) face.touching.push_back(w);
    for (std::size_t i = 0; i < n_; ++i)
        if (k[i] == 0) face.recession.push_back(i);
    face.dim = face_dimension(face, n_);
    return face;
}

Face NewtonPolyhedron::whole() const {
    return first_meet_locus(IntVector(n_, 0));
}

bool NewtonPolyhedron::facet_contains(const FacetInequality& facet, const Face& face) {
    for (auto i : face.recession)
        if (facet.normal[i] != 0) return false;
    for (const auto& w : face.touching)
        if (dot(facet.normal, w) != facet.offset) return false;
    return true;
}

bool NewtonPolyhedron::contains(std::span<const std::int64_t> x) const {
    if (x.size() != n_) throw std::invalid_argument("point has wrong length");
    for (auto v : x)
        if (v < 0) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) < f.offset) return false;
    return true;
}

std::vector<FacetInequality> NewtonPolyhedron::compute_facets() const {
    std::set<IntVector> normals;
    if (n_ == 1) {
        normals.insert(IntVector{1});
    } else {
        // Every facet contains a vertex w0 of the minimal elements; its
        // direction space is spanned by differences of its support points and
        // the unit vectors it recedes along. Enumerate all (n-1)-subsets of
        // those candidate directions and keep normals that support Γ along a
        // face of dimension n-1.
        const auto pts = minimal_elements(support_);
        for (const auto& w0 : pts) {
            IntMatrix dirs;
            for (const auto& w : pts) {
                if (w == w0) continue;
                IntVector d(n_);
                for (std::size_t i = 0; i < n_; ++i) d[i] = w[i] - w0[i];
                dirs.push_back(std::move(d));
            }
            for (std::size_t i = 0; i < n_; ++i) {
                IntVector e(n_, 0);
                e[i] = 1;
                dirs.push_back(std::move(e));
            }
            const std::size_t r = n_ - 1;
            if (dirs.size() < r) continue;
            std::vector<std::size_t> idx(r);
            for (std::size_t i = 0; i < r; ++i) idx[i] = i;
            IntMatrix chosen(r);
            for (;;) {
                for (std::size_t i = 0; i < r; ++i) chosen[i] = dirs[idx[i]];
                if (auto k = orthogonal_complement_generator(chosen)) {
                    bool nonneg = std::all_of(k->begin(), k->end(), [](auto v) { return v >= 0; });
                    bool nonpos = std::all_of(k->begin(), k->end(), [](auto v) { return v <= 0; });
                    if (nonpos && !nonneg)
                        for (auto& v : *k) v = -v;
                    if ((nonneg || nonpos) && !normals.count(*k) && m_value(*k) == dot(*k, w0) &&
                        first_meet_locus(*k).dim == static_cast<std::int64_t>(n_) - 1)
                        normals.insert(*k);
                }
                std::size_t j = r;
                while (j > 0 && idx[j - 1] == dirs.size() - r + j - 1) --j;
                if (j == 0) break;
                ++idx[j - 1];
                for (std::size_t t = j; t < r; ++t) idx[t] = idx[t - 1] + 1;
            }
        }
    }
    std::vector<FacetInequality> out;
    for (auto it = normals.rbegin(); it != normals.rend(); ++it) out.push_back({*it, m_value(*it)});
    return out;
}

std::int64_t face_dimension(const Face& face, std::size_t n) {
    IntMatrix rows;
    for (std::size_t i = 1; i < face.touching.size(); ++i) {
        IntVector d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = face.touching[i][c] - face.touching[0][c];
        rows.push_back(std::move(d));
    }
    for (auto i : face.recession) {
        IntVector e(n, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return rows.empty() ? 0 : static_cast<std::int64_t>(rank(rows));
}

std::vector<FacetInequality> facet_normals(const NewtonPolyhedron& gamma) {
    return gamma.facets();
}

namespace {

void check_face_of(const NewtonPolyhedron& gamma, const Face& face) {
    IntVector k(gamma.dimension(), 0);
    for (const auto& f : gamma.facets())
        if (NewtonPolyhedron::facet_contains(f, face))
            for (std::size_t i = 0; i < k.size(); ++i) k[i] += f.normal[i];
    if (!(gamma.first_meet_locus(k) == face))
        throw std::invalid_argument("face does not belong to the polynomial's Newton polyhedron");
}

} // namespace

IntegerPolynomial face_restriction(const IntegerPolynomial& f, const Face& face) {
    check_face_of(NewtonPolyhedron::of(f), face);
    return restrict_to_support(f, face.touching);
}

PolynomialMapping face_restriction(const PolynomialMapping& ff, const Face& face) {
    check_face_of(NewtonPolyhedron::of(ff), face);
    PolynomialMapping out;
    for (const auto& f : ff.components) {
        IntegerPolynomial r(f.nvars());
        for (const auto& w : face.touching) r.add_term(w, f.coefficient(w));
        out.components.push_back(std::move(r));
    }
    return out;
}

std::string to_string(const Face& face) {
    std::ostringstream os;
    os << "{touching:[";
    for (std::size_t i = 0; i < face.touching.size(); ++i) {
        os << (i ? "," : "") << '(';
        for (std::size_t c = 0; c < face.touching[i].size(); ++c)
            os << (c ? "," : "") << face.touching[i][c];
        os << ')';
    }
    os << "],recession:[";
    for (std::size_t i = 0; i < face.recession.size(); ++i)
        os << (i ? "," : "") << face.recession[i] + 1;
    os << "],dim:" << face.dim << '}';
    return os.str();
}

} // namespace igusa
