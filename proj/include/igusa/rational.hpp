#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace igusa {

/// Dense univariate polynomial in t over Q, coefficients in ascending order
/// with no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> coeffs);
    static UPoly constant(const mpq_class& c);
    static UPoly monomial(const mpq_class& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const mpq_class& leading() const { return c_.back(); }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const mpq_class& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    mpq_class operator()(const mpq_class& t) const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

struct UPolyDivision {
    UPoly quotient;
    UPoly remainder;
};
UPolyDivision divide(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

std::string to_string(const UPoly& f, const std::string& var = "t");

/// num/den in t, kept canonical: integer coefficients with no common
/// content, no common factor, and the denominator's leading coefficient
/// positive. Equal functions have identical representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UPoly::constant(1)) {}
    RationalFunction(const mpq_class& c);
    RationalFunction(UPoly num, UPoly den);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    // Throws std::domain_error at a root of the denominator.
    mpq_class evaluate(const mpq_class& t) const;

private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

std::string to_string(const RationalFunction& f, const std::string& var = "t");

// p^e for an integer e of either sign.
mpq_class power(std::uint64_t p, std::int64_t e);

/// p^{a s + b} - 1. With t = p^{-s} this is (p^b - t^a) / t^a.
struct ExpFactor {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const ExpFactor&, const ExpFactor&) = default;
    friend auto operator<=>(const ExpFactor&, const ExpFactor&) = default;
};

std::string to_string(const ExpFactor& f);

// Laurent polynomial in t: exponent -> nonzero coefficient.
using LaurentPoly = std::map<std::int64_t, mpq_class>;

/// numerator / prod(factors) for a fixed prime p, the display form of a
/// zeta function.
struct FactoredForm {
    std::uint64_t p = 2;
    LaurentPoly numerator;
    std::vector<ExpFactor> factors; // sorted

    static FactoredForm constant(std::uint64_t p, const mpq_class& c);

    RationalFunction expand() const;
};

FactoredForm operator*(const FactoredForm& a, const FactoredForm& b);
// Sum over the least common multiset of factors.
FactoredForm operator+(const FactoredForm& a, const FactoredForm& b);

void add_term(LaurentPoly& f, std::int64_t exponent, const mpq_class& c);
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);

} // namespace igusa
