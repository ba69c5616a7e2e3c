#include "igusa/linalg.hpp"

#include <algorithm>

#include <numeric>
#include <stdexcept>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"

namespace igusa {

namespace {

using MpzMatrix = std::vector<std::vector<mpz_class>>;

MpzMatrix to_mpz(const IntMatrix& rows) {
    MpzMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

// Fraction-free Gaussian elimination; returns rank and leaves `m` in echelon form.
std::size_t bareiss_rank(MpzMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw SizeGuardError("integer exceeds 64-bit range in geometry");
    return v.get_si();
}

} // namespace

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
    if (acc > INT64_MAX || acc < INT64_MIN) throw SizeGuardError("dot product overflow");
    return static_cast<std::int64_t>(acc);
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

IntVector make_primitive(IntVector v) {
    auto g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

std::size_t rank(const IntMatrix& rows) {
    auto m = to_mpz(rows);
    return bareiss_rank(m);
}

mpz_class determinant(const IntMatrix& square) {
    const std::size_t n = square.size();
    if (n == 0) return 1;
    for (const auto& r : square)
        if (r.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    auto m = to_mpz(square);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& input, std::uint64_t p) {
    auto m = input;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    for (auto& r : m)
        for (auto& x : r) x %= p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        auto inv = inv_mod_prime(m[r][c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            auto factor = mul_mod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mul_mod(factor, m[r][j], p)) % p;
        }
        ++r;
    }
    return r;
}

std::optional<IntVector> orthogonal_complement_generator(const IntMatrix& rows) {
    if (rows.empty()) throw std::invalid_argument("orthogonal complement of nothing");
    const std::size_t n = rows.front().size();
    if (rows.size() + 1 != n) throw std::invalid_argument("need n-1 vectors in Z^n");
    IntVector normal(n);
    IntMatrix minor(n - 1, IntVector(n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor[i][cc++] = rows[i][c];
        mpz_class d = determinant(minor);
        if (j % 2) d = -d;
        normal[j] = to_int64(d);
    }
    if (std::all_of(normal.begin(), normal.end(), [](auto x) { return x == 0; })) return std::nullopt;
    return make_primitive(std::move(normal));
}

mpz_class lattice_index(const IntMatrix& rows) {
    if (rows.empty()) return 1;
    const std::size_t r = rows.size(), n = rows.front().size();
    if (rank(rows) != r) throw std::invalid_argument("lattice_index: dependent vectors");
    // Enumerate all r-subsets of the n columns.
    mpz_class g = 0;
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    IntMatrix sub(r, IntVector(r));
    for (;;) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = rows[i][cols[j]];
        mpz_class d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        std::size_t k = r;
        while (k > 0 && cols[k - 1] == n - r + k - 1) --k;
        if (k == 0) break;
        ++cols[k - 1];
        for (std::size_t j = k; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

std::optional<RationalCoordinates> coordinates_in_span(const IntMatrix& rows,
                                                       std::span<const std::int64_t> x) {
    const std::size_t r = rows.size();
    if (r == 0) {
        for (auto v : x)
            if (v != 0) return std::nullopt;
        return RationalCoordinates{{}, 1};
    }
    const std::size_t n = rows.front().size();
    // Pick r columns with a nonzero minor, solve by Cramer's rule on those,
    // then verify the remaining coordinates.
    std::vector<std::size_t> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    IntMatrix sub(r, IntVector(r));
    mpz_class det = 0;
    for (;;) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[j][i] = rows[i][cols[j]];
        det = determinant(sub);
        if (det != 0) break;
        std::size_t k = r;
        while (k > 0 && cols[k - 1] == n - r + k - 1) --k;
        if (k == 0) throw std::invalid_argument("coordinates_in_span: dependent basis");
        ++cols[k - 1];
        for (std::size_t j = k; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
    RationalCoordinates out;
    out.numerators.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto m = sub;
        for (std::size_t j = 0; j < r; ++j) m[j][i] = x[cols[j]];
        out.numerators[i] = determinant(m);
    }
    out.denominator = det;
    if (det < 0) {
        out.denominator = -det;
        for (auto& v : out.numerators) v = -v;
    }
    for (std::size_t c = 0; c < n; ++c) {
        mpz_class lhs = 0;
        for (std::size_t i = 0; i < r; ++i) lhs += out.numerators[i] * rows[i][c];
        if (lhs != out.denominator * x[c]) return std::nullopt;
    }
    return out;
}

} // namespace igusa
