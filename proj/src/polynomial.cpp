#include "igusa/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"

namespace igusa {

namespace {

constexpr std::size_t kMaxTerms = 1'000'000;

void check_exponents(const ExponentVector& w) {
    for (auto e : w)
        if (e > kMaxExponent)
            throw ParseError("exponent exceeds " + std::to_string(kMaxExponent));
}

} // namespace

std::int64_t degree(const ExponentVector& w) {
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    auto da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
}

IntegerPolynomial::IntegerPolynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

IntegerPolynomial::IntegerPolynomial(std::size_t nvars, TermMap terms)
    : IntegerPolynomial(nvars) {
    for (auto& [w, c] : terms) add_term(w, c);
}

IntegerPolynomial IntegerPolynomial::constant(std::size_t nvars, const mpz_class& c) {
    IntegerPolynomial f(nvars);
    f.add_term(ExponentVector(nvars, 0), c);
    return f;
}

IntegerPolynomial IntegerPolynomial::monomial(const ExponentVector& w, const mpz_class& c) {
    IntegerPolynomial f(w.size());
    f.add_term(w, c);
    return f;
}

IntegerPolynomial IntegerPolynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    ExponentVector w(nvars, 0);
    w[index] = 1;
    return monomial(w);
}

bool IntegerPolynomial::has_constant_term() const {
    return terms_.count(ExponentVector(nvars_, 0)) != 0;
}

std::int64_t IntegerPolynomial::total_degree() const {
    return terms_.empty() ? -1 : degree(terms_.rbegin()->first);
}

std::vector<ExponentVector> IntegerPolynomial::support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.push_back(w);
    return out;
}

mpz_class IntegerPolynomial::coefficient(const ExponentVector& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntegerPolynomial::add_term(const ExponentVector& w, const mpz_class& c) {
    if (w.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    for (auto e : w)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntegerPolynomial IntegerPolynomial::operator-() const {
    IntegerPolynomial r(nvars_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    IntegerPolynomial r(nvars_);
    ExponentVector w(nvars_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) w[i] = wa[i] + wb[i];
            check_exponents(w);
            r.add_term(w, ca * cb);
        }
        if (r.terms_.size() > kMaxTerms) throw ParseError("expanded polynomial has too many terms");
    }
    terms_ = std::move(r.terms_);
    return *this;
}

bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

IntegerPolynomial IntegerPolynomial::pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent));
    if (terms_.size() == 1) {
        ExponentVector w = terms_.begin()->first;
        const mpz_class& c = terms_.begin()->second;
        for (auto& x : w) x *= e;
        check_exponents(w);
        mpz_class ce;
        mpz_pow_ui(ce.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
        return monomial(w, ce);
    }
    if (!is_zero() && total_degree() * e > kMaxExponent)
        throw ParseError("exponent exceeds " + std::to_string(kMaxExponent));
    IntegerPolynomial result = constant(nvars_, 1);
    IntegerPolynomial base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::size_t PolynomialMapping::nvars() const {
    return components.empty() ? 0 : components.front().nvars();
}

std::vector<ExponentVector> PolynomialMapping::support() const {
    std::set<ExponentVector> all;
    for (const auto& f : components)
        for (const auto& [w, c] : f.terms()) all.insert(w);
    return {all.begin(), all.end()};
}

void validate_vanishing_at_origin(const IntegerPolynomial& f, std::string_view role) {
    if (f.is_zero()) throw std::invalid_argument(std::string(role) + " must be nonzero");
    if (f.has_constant_term())
        throw std::invalid_argument(std::string(role) + " must vanish at the origin");
}

void validate(const PolynomialMapping& ff) {
    if (ff.components.empty()) throw std::invalid_argument("mapping needs at least one component");
    bool any_nonzero = false;
    for (const auto& f : ff.components) {
        if (f.nvars() != ff.nvars()) throw std::invalid_argument("mapping components disagree on n");
        if (f.has_constant_term())
            throw std::invalid_argument("mapping component must vanish at the origin");
        any_nonzero = any_nonzero || !f.is_zero();
    }
    if (!any_nonzero) throw std::invalid_argument("mapping must have a nonzero component");
}

void validate(const MonomialIdealSpec& ideal) {
    if (ideal.generators.empty()) throw std::invalid_argument("ideal needs at least one generator");
    const auto n = ideal.generators.front().size();
    if (n == 0) throw std::invalid_argument("ideal generators need at least one variable");
    for (const auto& w : ideal.generators) {
        if (w.size() != n) throw std::invalid_argument("ideal generators disagree on n");
        if (std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; }))
            throw std::invalid_argument("ideal must be proper (generator 1 given)");
        for (auto e : w)
            if (e < 0) throw std::invalid_argument("negative exponent in generator");
    }
}

std::string variable_name(std::size_t index, std::size_t nvars) {
    if (nvars <= 3) return std::string(1, "xyz"[index]);
    return "x" + std::to_string(index + 1);
}

namespace {

template <class Coeff>
void print_term(std::ostringstream& os, const ExponentVector& w, const Coeff& c, bool first,
                std::size_t nvars) {
    bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    bool is_const = std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; });
    bool printed = false;
    if (mag != 1 || is_const) {
        os << mag;
        printed = true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (printed) os << '*';
        os << variable_name(i, nvars);
        if (w[i] > 1) os << '^' << w[i];
        printed = true;
    }
}

} // namespace

std::string to_string(const IntegerPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        print_term(os, it->first, it->second, first, f.nvars());
        first = false;
    }
    return os.str();
}

std::string to_string(const ModPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        print_term(os, it->first, static_cast<long long>(it->second), first, f.nvars);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    IntegerPolynomial parse() {
        auto f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    IntegerPolynomial expr() {
        auto acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    IntegerPolynomial term() {
        auto acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    IntegerPolynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    IntegerPolynomial power() {
        auto base = primary();
        if (accept('^')) {
            skip_ws();
            auto start = pos_;
            auto e = integer_literal();
            if (e > kMaxExponent) {
                pos_ = start;
                fail("exponent overflow (> " + std::to_string(kMaxExponent) + ")");
            }
            try {
                return base.pow(e.get_si());
            } catch (const ParseError& err) {
                pos_ = start;
                fail(err.what());
            }
        }
        return base;
    }

    mpz_class integer_literal() {
        skip_ws();
        auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    IntegerPolynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IntegerPolynomial::constant(nvars_, integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    IntegerPolynomial variable() {
        auto start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        std::size_t index = nvars_;
        if (nvars_ <= 3 && name.size() == 1 && (name == "x" || name == "y" || name == "z")) {
            index = static_cast<std::size_t>(name[0] - 'x');
        } else if (name.size() >= 2 && name[0] == 'x' &&
                   std::all_of(name.begin() + 1, name.end(),
                               [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
                   name[1] != '0' && name.size() <= 6) {
            index = std::stoul(name.substr(1)) - 1;
        }
        if (index >= nvars_) {
            pos_ = start;
            fail("unknown variable '" + name + "' for n=" + std::to_string(nvars_));
        }
        return IntegerPolynomial::variable(nvars_, index);
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

} // namespace

IntegerPolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    if (nvars == 0) throw std::invalid_argument("n must be at least 1");
    return Parser(text, nvars).parse();
}

// ---------------------------------------------------------------------------

ModPolynomial reduce_mod_p(const IntegerPolynomial& f, std::uint64_t p) {
    ModPolynomial r;
    r.nvars = f.nvars();
    r.p = p;
    mpz_class m;
    for (const auto& [w, c] : f.terms()) {
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
        auto v = m.get_ui();
        if (v != 0) r.terms.emplace_back(w, v);
    }
    return r;
}

IntegerPolynomial partial_derivative(const IntegerPolynomial& f, std::size_t index) {
    if (index >= f.nvars()) throw std::out_of_range("derivative variable index out of range");
    IntegerPolynomial r(f.nvars());
    for (const auto& [w, c] : f.terms()) {
        if (w[index] == 0) continue;
        auto w2 = w;
        --w2[index];
        r.add_term(w2, c * w[index]);
    }
    return r;
}

ModPolynomial partial_derivative(const ModPolynomial& f, std::size_t index) {
    if (index >= f.nvars) throw std::out_of_range("derivative variable index out of range");
    ModPolynomial r;
    r.nvars = f.nvars;
    r.p = f.p;
    for (const auto& [w, c] : f.terms) {
        if (w[index] == 0) continue;
        auto v = mul_mod(c, static_cast<std::uint64_t>(w[index]) % f.p, f.p);
        if (v == 0) continue;
        auto w2 = w;
        --w2[index];
        r.terms.emplace_back(std::move(w2), v);
    }
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& a, const auto& b) { return GrlexLess{}(a.first, b.first); });
    return r;
}

std::uint64_t evaluate_mod(const IntegerPolynomial& f, std::span<const std::int64_t> a,
                           std::uint64_t modulus) {
    if (a.size() != f.nvars()) throw std::invalid_argument("point dimension mismatch");
    std::vector<std::uint64_t> base(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto r = a[i] % static_cast<std::int64_t>(modulus);
        base[i] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(modulus) : r);
    }
    std::uint64_t acc = 0;
    mpz_class m;
    for (const auto& [w, c] : f.terms()) {
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), modulus);
        std::uint64_t term = m.get_ui();
        for (std::size_t i = 0; i < w.size() && term; ++i)
            if (w[i]) term = mul_mod(term, pow_mod(base[i], static_cast<std::uint64_t>(w[i]), modulus), modulus);
        acc = (acc + term) % modulus;
    }
    return acc;
}

std::uint64_t evaluate_mod(const ModPolynomial& f, std::span<const std::uint64_t> a) {
    std::uint64_t acc = 0;
    for (const auto& [w, c] : f.terms) {
        std::uint64_t term = c;
        for (std::size_t i = 0; i < w.size() && term; ++i)
            if (w[i]) term = mul_mod(term, pow_mod(a[i], static_cast<std::uint64_t>(w[i]), f.p), f.p);
        acc = (acc + term) % f.p;
    }
    return acc;
}

IntegerPolynomial restrict_to_support(const IntegerPolynomial& f,
                                      std::span<const ExponentVector> keep) {
    IntegerPolynomial r(f.nvars());
    for (const auto& w : keep) r.add_term(w, f.coefficient(w));
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / p) return 0;
        r *= p;
    }
    return r <= limit ? r : 0;
}

} // namespace igusa
