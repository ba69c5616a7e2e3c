#include <doctest.h>

#include <random>

#include "igusa/counting.hpp"
#include "igusa/kernels.hpp"
#include "igusa/linalg.hpp"
#include "igusa/zeta.hpp"
#include "support.hpp"

using namespace igusa;

namespace {

// Brute-force count of torus zeros of g, straight from the definition.
std::uint64_t naive_torus_zeros(const IntegerPolynomial& g, std::uint64_t p) {
    std::uint64_t count = 0;
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(p); ++x)
        for (std::int64_t y = 1; y < static_cast<std::int64_t>(p); ++y) {
            std::vector<std::int64_t> a{x, y};
            if (evaluate_mod(g, a, p) == 0) ++count;
        }
    return count;
}

} // namespace

TEST_SUITE("residue-counting") {

TEST_CASE("torus zeros of the example measure") {
    const auto g = testdata::example_g();
    const std::pair<std::uint64_t, std::uint64_t> cases[] = {{13, 36}, {7, 18}, {5, 4}, {11, 10}};
    for (auto [p, want] : cases) {
        PolynomialMapping none;
        none.components.push_back(IntegerPolynomial::monomial({1, 1}));
        auto c = count_triple(none, g, p);
        CHECK(c.P == want);
        CHECK(c.N == 0);
        CHECK(c.Q == 0);
        CHECK(naive_torus_zeros(g, p) == want);
    }
}

TEST_CASE("degeneracy of the example holds exactly at p = 3") {
    const auto fside = FSide::ideal(testdata::example_ideal());
    const Measure g = testdata::example_g();
    CHECK_FALSE(check_hypotheses(fside, g, 3).ok());
    for (std::uint64_t p : {2, 5, 7, 11, 13}) CHECK(check_hypotheses(fside, g, p).ok());
    CHECK_FALSE(check_nondegenerate_single(testdata::example_g(), 3).ok());
}

TEST_CASE("degenerate single polynomial") {
    // (x+y)^2 is singular along x = -y on the face of x^2 + 2xy + y^2.
    auto f = parse_polynomial("x^2 + 2*x*y + y^2", 2);
    CHECK_FALSE(check_nondegenerate_single(f, 5).ok());
    CHECK(check_nondegenerate_single(parse_polynomial("x^2 + y^3", 2), 5).ok());
}

TEST_CASE("strong non-degeneracy of mappings") {
    PolynomialMapping ok{{parse_polynomial("x + y", 3), parse_polynomial("y + z", 3)}};
    CHECK(check_strong_nondegenerate(ok, 5).ok());
    PolynomialMapping bad{{parse_polynomial("x + y", 3), parse_polynomial("2*x + 2*y", 3)}};
    CHECK_FALSE(check_strong_nondegenerate(bad, 5).ok());
}

TEST_CASE("rank mod p never exceeds the rational rank and agrees for large p") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> c(-4, 4), dim(1, 4);
    for (int it = 0; it < 200; ++it) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, IntVector(cols));
        for (auto& r : m)
            for (auto& x : r) x = c(rng);
        const auto q_rank = rank(m);
        for (std::uint64_t p : {2, 3, 5, 1000003}) {
            std::vector<std::vector<std::uint64_t>> mp(rows, std::vector<std::uint64_t>(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    mp[i][j] = static_cast<std::uint64_t>(((m[i][j] % static_cast<std::int64_t>(p)) + p) % p);
            const auto r = rank_mod_p(mp, p);
            CHECK(r <= q_rank);
            if (p == 1000003) CHECK(r == q_rank);
        }
    }
}

TEST_CASE("jacobian rank at a point") {
    std::vector<ModPolynomial> polys{reduce_mod_p(parse_polynomial("x - y", 2), 5),
                                     reduce_mod_p(parse_polynomial("x*y - x", 2), 5)};
    std::vector<std::uint64_t> a{1, 1};
    CHECK(jacobian_rank_mod_p(polys, a, 5) == 2);
    std::vector<ModPolynomial> dup{polys[0], polys[0]};
    CHECK(jacobian_rank_mod_p(dup, a, 5) == 1);
}

TEST_CASE("parallel kernels match the serial reference") {
    PolynomialMapping ff{{parse_polynomial("x^2*y + z^3 - x", 3), parse_polynomial("y*z + x^2", 3)}};
    const Measure g = parse_polynomial("x*y*z + y^2 - z", 3);
    for (std::uint64_t p : {2, 3, 7, 11}) {
        CHECK(count_triple(ff, g, p) == count_triple_serial(ff, g, p));
        CHECK(count_triple(ff, std::nullopt, p) == count_triple_serial(ff, std::nullopt, p));
    }
    for (std::uint64_t p : {2, 3}) {
        const unsigned level = p == 2 ? 5 : 3;
        std::uint64_t modulus = 1;
        for (unsigned i = 0; i < level; ++i) modulus *= p;
        std::vector<kernels::CompiledPolynomial> fs;
        for (const auto& f : ff.components) fs.emplace_back(f, modulus);
        kernels::CompiledPolynomial gc(*g, modulus);
        kernels::ResidueDomain dom;
        dom.p = p;
        dom.level = level;
        for (int i = 0; i < 3; ++i) {
            std::vector<std::uint64_t> all;
            for (std::uint64_t r = 0; r < p; ++r) all.push_back(r);
            dom.allowed_mod_p.push_back(all);
        }
        for (unsigned s0 : {1u, 2u})
            CHECK(kernels::integrate_residues(fs, &gc, dom, s0) == kernels::serial::integrate_residues(fs, &gc, dom, s0));
        std::vector<kernels::CompiledPolynomial> fp;
        for (const auto& f : ff.components) fp.emplace_back(f, p);
        kernels::CompiledPolynomial gp(*g, p);
        CHECK(kernels::torus_zero_counts(fp, &gp, 3, p) == kernels::serial::torus_zero_counts(fp, &gp, 3, p));
    }
}

}
