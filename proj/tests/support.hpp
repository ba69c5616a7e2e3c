#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "igusa/fside.hpp"
#include "igusa/rational.hpp"

namespace testdata {

inline igusa::MonomialIdealSpec example_ideal() { return {{{5, 1}, {3, 2}, {2, 5}}}; }
inline igusa::IntegerPolynomial example_g() { return igusa::parse_polynomial("x^4*y^2 + x*y^5", 2); }

// A(p,t) of the worked example: t-degree -> list of (p-degree, coefficient).
inline const std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& closed_form_A() {
    static const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> a = {
        {21, {{2, -1}, {1, -3}, {0, 1}}},
        {20, {{5, 1}, {4, 3}, {3, -1}}},
        {19, {{5, -1}, {4, 1}, {3, 4}, {2, -1}}},
        {18, {{7, -1}, {6, -3}, {5, 1}, {4, -1}, {2, 1}}},
        {17, {{7, 2}, {5, -2}}},
        {16, {{6, 1}, {4, -1}}},
        {15, {{9, -1}, {7, 1}, {6, -1}, {4, 1}}},
        {14, {{13, 1}, {12, 3}, {11, -1}, {9, 1}, {7, -1}}},
        {13, {{15, -3}}},
        {12, {{15, -1}, {14, -3}, {13, 1}}},
        {11, {{17, 3}, {15, 1}, {13, -1}}},
        {10, {{18, -1}, {16, 1}, {14, 1}, {13, 3}, {12, -1}}},
        {9, {{17, -2}, {16, -3}, {15, 2}}},
        {8, {{20, 1}, {18, -1}, {17, 2}, {15, -5}}},
        {7, {{20, -1}, {18, 4}}},
        {6, {{19, -1}, {17, 1}}},
        {3, {{25, -1}, {24, -3}, {23, 1}}},
        {2, {{27, 3}}},
        {1, {{26, 3}}},
        {0, {{30, 1}, {29, -3}, {28, -1}}},
    };
    return a;
}

// p^6 (p-1) A(p,t) / ((p+1)(p^2-t^2)(p^12-t^11)(p^8-t^5)(p^11-t^7)(p^3-t)), valid for p = 1,7 mod 12.
inline igusa::RationalFunction closed_form(std::uint64_t p) {
    using igusa::UPoly;
    using igusa::power;
    UPoly a;
    for (const auto& [tdeg, row] : closed_form_A()) {
        mpq_class c = 0;
        for (auto [pdeg, coeff] : row) c += coeff * power(p, pdeg);
        a += UPoly::monomial(c, static_cast<std::size_t>(tdeg));
    }
    const mpq_class pq(static_cast<unsigned long>(p));
    UPoly num = a * (power(p, 6) * (pq - 1));
    auto binom = [&](int pe, std::size_t te) { return UPoly::constant(power(p, pe)) - UPoly::monomial(1, te); };
    UPoly den = UPoly::constant(pq + 1) * binom(2, 2) * binom(12, 11) * binom(8, 5) * binom(11, 7) * binom(3, 1);
    return igusa::RationalFunction(num, den);
}

} // namespace testdata
