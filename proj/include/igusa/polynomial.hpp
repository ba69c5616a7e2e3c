#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace igusa {

using IntVector = std::vector<std::int64_t>;

// Exponents of a monomial x1^w1 ... xn^wn.
using ExponentVector = IntVector;

inline constexpr std::int64_t kMaxExponent = 1'000'000;

std::int64_t degree(const ExponentVector& w);

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Polynomial over F_p: exponent -> coefficient in [1, p).
struct ModPolynomial {
    std::size_t nvars = 0;
    std::uint64_t p = 0;
    std::vector<std::pair<ExponentVector, std::uint64_t>> terms;

    bool is_zero() const { return terms.empty(); }
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so the support is
/// exactly the key set of `terms()`.
class IntegerPolynomial {
public:
    using TermMap = std::map<ExponentVector, mpz_class, GrlexLess>;

    explicit IntegerPolynomial(std::size_t nvars = 1);
    IntegerPolynomial(std::size_t nvars, TermMap terms);

    static IntegerPolynomial constant(std::size_t nvars, const mpz_class& c);
    static IntegerPolynomial monomial(const ExponentVector& w, const mpz_class& c = 1);
    static IntegerPolynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;
    std::int64_t total_degree() const;
    std::vector<ExponentVector> support() const;

    mpz_class coefficient(const ExponentVector& w) const;
    void add_term(const ExponentVector& w, const mpz_class& c);

    IntegerPolynomial operator-() const;
    IntegerPolynomial& operator+=(const IntegerPolynomial& o);
    IntegerPolynomial& operator-=(const IntegerPolynomial& o);
    IntegerPolynomial& operator*=(const IntegerPolynomial& o);
    friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
    friend IntegerPolynomial operator*(IntegerPolynomial a, const IntegerPolynomial& b) { return a *= b; }
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b);

    IntegerPolynomial pow(std::int64_t e) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// A tuple (f_1, ..., f_t) sharing the variable count.
struct PolynomialMapping {
    std::vector<IntegerPolynomial> components;

    std::size_t nvars() const;
    std::size_t size() const { return components.size(); }
    // Union of the component supports, sorted and deduplicated.
    std::vector<ExponentVector> support() const;
};

// Monic monomial generators of a proper monomial ideal; may be redundant.
struct MonomialIdealSpec {
    std::vector<ExponentVector> generators;
    std::size_t nvars() const { return generators.empty() ? 0 : generators.front().size(); }
};

void validate_vanishing_at_origin(const IntegerPolynomial& f, std::string_view role);
void validate(const PolynomialMapping& ff);
void validate(const MonomialIdealSpec& ideal);

std::string variable_name(std::size_t index, std::size_t nvars);
std::string to_string(const IntegerPolynomial& f);
std::string to_string(const ModPolynomial& f);

// Parses the ASCII polynomial grammar: integer literals, variables x1..xn
// (x, y, z when n <= 3), + - * ^ and parentheses, unary minus.
IntegerPolynomial parse_polynomial(std::string_view text, std::size_t nvars);

ModPolynomial reduce_mod_p(const IntegerPolynomial& f, std::uint64_t p);

// Formal partial derivative in variable `index` (0-based).
IntegerPolynomial partial_derivative(const IntegerPolynomial& f, std::size_t index);
ModPolynomial partial_derivative(const ModPolynomial& f, std::size_t index);

// f(a) reduced into [0, modulus). Requires modulus < 2^63.
std::uint64_t evaluate_mod(const IntegerPolynomial& f, std::span<const std::int64_t> a,
                           std::uint64_t modulus);
std::uint64_t evaluate_mod(const ModPolynomial& f, std::span<const std::uint64_t> a);

// Keeps the terms whose exponent lies in `keep` (a subset of the support).
IntegerPolynomial restrict_to_support(const IntegerPolynomial& f,
                                      std::span<const ExponentVector> keep);

} // namespace igusa
