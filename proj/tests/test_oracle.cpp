#include <doctest.h>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"
#include "igusa/oracle.hpp"
#include "igusa/zeta.hpp"
#include "support.hpp"

using namespace igusa;

namespace {

struct Instance {
    FSide fside;
    IntegerPolynomial g;
};

FSide single(const char* f, std::size_t n) { return FSide::single(parse_polynomial(f, n)); }

FSide mapping(std::initializer_list<const char*> fs, std::size_t n) {
    PolynomialMapping ff;
    for (auto f : fs) ff.components.push_back(parse_polynomial(f, n));
    return FSide::mapping(ff);
}

// Instances for the four coset cases at the base point (1,...,1); every prime works.
std::vector<std::pair<Instance, CosetCase>> coset_instances() {
    auto P2 = [](const char* s) { return parse_polynomial(s, 2); };
    auto P3 = [](const char* s) { return parse_polynomial(s, 3); };
    return {
        {{single("x*y", 2), P2("x*y")}, {false, false}},
        {{single("x - y", 2), P2("x*y")}, {true, false}},
        {{single("x*y", 2), P2("x - y")}, {false, true}},
        {{single("x - y", 2), P2("x*y - x")}, {true, true}},
        {{mapping({"x*y", "y*z"}, 3), P3("x*y*z")}, {false, false}},
        {{mapping({"x - y", "y - z"}, 3), P3("x*y*z")}, {true, false}},
        {{mapping({"x*y", "y*z"}, 3), P3("x - z")}, {false, true}},
        {{mapping({"x - y", "y - z"}, 3), P3("x*z - x")}, {true, true}},
    };
}

unsigned level_for(std::uint64_t p, std::size_t n) {
    unsigned m = 1;
    while (checked_pow(p, (m + 1) * n, 1'000'000) != 0) ++m;
    return m;
}

} // namespace

TEST_SUITE("oracle-verify") {

TEST_CASE("geometric series for f = x") {
    auto b = truncated_integral(single("x", 1), std::nullopt, 3, 1, 6);
    CHECK(b.contains(mpq_class(3, 4)));
    CHECK(b.width() > 0);
}

TEST_CASE("brackets nest as the level grows") {
    const auto fside = FSide::ideal(testdata::example_ideal());
    const Measure g = testdata::example_g();
    Bracket prev = truncated_integral(fside, g, 2, 1, 1);
    for (unsigned m = 2; m <= 7; ++m) {
        auto b = truncated_integral(fside, g, 2, 1, m);
        CHECK(prev.lo <= b.lo);
        CHECK(b.hi <= prev.hi);
        prev = b;
    }
}

TEST_CASE("truncated integral contains the assembled formula") {
    auto z = assemble(FSide::ideal({{{1, 1}}}), parse_polynomial("x*y", 2), 2);
    auto b = truncated_integral(FSide::ideal({{{1, 1}}}), parse_polynomial("x*y", 2), 2, 2, 8);
    CHECK(b.contains(evaluate_at(z.reduced, mpq_class(1, 4))));
    auto zs = assemble(single("x^2 + y^3", 2), parse_polynomial("x + y", 2), 5);
    auto bs = truncated_integral(single("x^2 + y^3", 2), parse_polynomial("x + y", 2), 5, 1, 5);
    CHECK(bs.contains(evaluate_at(zs.reduced, mpq_class(1, 5))));
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(truncated_integral(single("x + y", 2), std::nullopt, 10007, 1, 3), SizeGuardError);
}

TEST_CASE("measure lemmas") {
    const Instance instances[] = {
        {single("x - y", 2), parse_polynomial("x*y - x", 2)},
        {single("x - y", 3), parse_polynomial("z - x", 3)},
        {mapping({"x - y"}, 2), parse_polynomial("x*y - x", 2)},
        {mapping({"x - y", "y - z"}, 3), parse_polynomial("x*z - x", 3)},
    };
    for (const auto& in : instances) {
        const auto n = in.fside.nvars(), t = in.fside.t_count();
        for (std::uint64_t p : {2, 3, 5}) {
            auto a = find_base_point(in.fside, in.g, p);
            REQUIRE(a);
            for (unsigned k = 1; k <= 3; ++k)
                for (unsigned l = 1; l <= std::min(k, 2u); ++l) {
                    if (checked_pow(p, k * n, 100'000'000) == 0) continue;
                    CHECK(measure_A_kl(in.fside, in.g, *a, p, k, l) == lemma_value(p, n, t, k, l));
                }
        }
    }
}

TEST_CASE("measure lemma hypotheses") {
    auto f = single("x - y", 2);
    auto g = parse_polynomial("x*y - x", 2);
    CHECK_THROWS_AS(measure_A_kl(f, g, {1, 1}, 5, 1, 2), HypothesisError);
    CHECK_THROWS_AS(measure_A_kl(f, g, {1, 2}, 5, 2, 1), HypothesisError);
    CHECK_FALSE(find_base_point(mapping({"x", "y"}, 2), parse_polynomial("x + y", 2), 5));
}

TEST_CASE("coset integrals match the four closed cases") {
    for (const auto& [in, want] : coset_instances()) {
        const auto n = in.fside.nvars(), t = in.fside.t_count();
        const IntVector a(n, 1);
        for (std::uint64_t p : {2, 3, 5}) {
            auto got = coset_case(in.fside, in.g, a, p);
            CHECK(got.f_zero == want.f_zero);
            CHECK(got.g_zero == want.g_zero);
            for (unsigned s0 : {1u, 2u}) {
                auto b = coset_integral(in.fside, in.g, a, p, s0, level_for(p, n));
                CHECK(b.contains(proposition_value(want, p, n, t, s0)));
                if (!want.f_zero && !want.g_zero) CHECK(b.lo == b.hi);
            }
        }
    }
}

TEST_CASE("named closed coset values") {
    const mpq_class p5(5);
    CHECK(proposition_value({false, false}, 5, 2, 1, 1) == mpq_class(1, 25));
    CHECK(proposition_value({false, true}, 5, 2, 1, 1) == mpq_class(1, 25) / 6);
    CHECK(proposition_value({true, false}, 5, 3, 2, 1) == mpq_class(1, 125) * 24 / (power(5, 3) - 1));
    CHECK(proposition_value({true, true}, 5, 2, 1, 1) == mpq_class(1, 25) * 4 / ((power(5, 2) - 1) * 6));
}

TEST_CASE("torus integrals match the counting corollaries") {
    struct Case {
        FSide fside;
        Measure g;
        std::uint64_t p;
    };
    std::vector<Case> cases = {
        {single("x - y", 2), parse_polynomial("x*y - x", 2), 2},
        {single("x - y", 2), parse_polynomial("x*y - x", 2), 3},
        {single("x - y", 2), parse_polynomial("x*y - x", 2), 5},
        {single("x^2 + y^3", 2), parse_polynomial("x + y", 2), 5},
        {single("x + y", 2), std::nullopt, 3},
        {mapping({"x - y", "y - z"}, 3), parse_polynomial("x*z - x", 3), 2},
        {mapping({"x - y", "y - z"}, 3), parse_polynomial("x*z - x", 3), 3},
        {mapping({"x - y", "y - z"}, 3), parse_polynomial("x*z - x", 3), 5},
        {FSide::ideal({{{1, 1}}}), testdata::example_g(), 13},
    };
    for (const auto& c : cases) {
        const auto n = c.fside.nvars(), t = c.fside.t_count();
        auto counts = count_triple(c.fside.components(), c.g, c.p);
        for (unsigned s0 : {1u, 2u}) {
            auto b = torus_integral(c.fside, c.g, c.p, s0, level_for(c.p, n));
            CHECK(b.contains(corollary_value(counts.N, counts.P, counts.Q, c.p, n, t, s0)));
        }
    }
    auto constant = torus_integral(single("x*y", 2), std::nullopt, 5, 1, 1);
    CHECK(constant.lo == constant.hi);
    CHECK(constant.lo == mpq_class(16, 25));
    CHECK(corollary_value(0, 36, 0, 13, 2, 1, 1) == mpq_class(774, 1183));
}

}
