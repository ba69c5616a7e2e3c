#include "igusa/rational.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace igusa {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

UPoly UPoly::constant(const mpq_class& c) { return UPoly(std::vector<mpq_class>{c}); }

UPoly UPoly::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const mpq_class& c) {
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

mpq_class UPoly::operator()(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPolyDivision divide(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {UPoly(), a};
    std::vector<mpq_class> quo(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        mpq_class q = rem[i] / b.leading();
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * mpq_class(1 / a.leading());
}

std::string to_string(const UPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        mpq_class c = f.coeffs()[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0 || c != 1) out += c.get_str();
        if (i > 0) {
            if (c != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RationalFunction::RationalFunction(const mpq_class& c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {
    normalize();
}

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(1);
        return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide(num_, g).quotient;
        den_ = divide(den_, g).quotient;
    }
    // Clear denominators, then remove the joint content.
    mpz_class l = 1;
    for (const auto* f : {&num_, &den_})
        for (const auto& c : f->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_class content = 0;
    for (const auto* f : {&num_, &den_})
        for (const auto& c : f->coeffs()) {
            mpz_class v = c.get_num() * (l / c.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    mpq_class scale(l, content);
    if (den_.leading() < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

mpq_class RationalFunction::evaluate(const mpq_class& t) const {
    mpq_class d = den_(t);
    if (d == 0) throw std::domain_error("evaluation at a pole t = " + t.get_str());
    return num_(t) / d;
}

std::string to_string(const RationalFunction& f, const std::string& var) {
    if (f.den().degree() == 0 && f.den().leading() == 1) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

mpq_class power(std::uint64_t p, std::int64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(1, r) : mpq_class(r);
}

std::string to_string(const ExpFactor& f) {
    std::string e;
    if (f.a != 0) e = (f.a == 1 ? "" : std::to_string(f.a)) + "s";
    if (f.b != 0) {
        if (!e.empty() && f.b > 0) e += "+";
        e += std::to_string(f.b);
    }
    if (e.empty()) e = "0";
    if (e == "1") return "p-1";
    return "p^{" + e + "}-1";
}

FactoredForm FactoredForm::constant(std::uint64_t p, const mpq_class& c) {
    FactoredForm out;
    out.p = p;
    add_term(out.numerator, 0, c);
    return out;
}

void add_term(LaurentPoly& f, std::int64_t exponent, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = f.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(out, ea + eb, ca * cb);
    return out;
}

namespace {

// (p^b - t^a) / t^a as a Laurent polynomial.
LaurentPoly laurent(const ExpFactor& f, std::uint64_t p) {
    LaurentPoly out;
    add_term(out, -f.a, power(p, f.b));
    add_term(out, 0, -1);
    return out;
}

void check_same_prime(const FactoredForm& a, const FactoredForm& b) {
    if (a.p != b.p) throw std::invalid_argument("factored forms for different primes");
}

} // namespace

RationalFunction FactoredForm::expand() const {
    if (numerator.empty()) return RationalFunction();
    std::int64_t shift = numerator.begin()->first;
    UPoly num, den = UPoly::constant(1);
    for (const auto& f : factors) {
        shift += f.a;
        UPoly d = UPoly::monomial(-1, static_cast<std::size_t>(f.a));
        d += UPoly::constant(power(p, f.b));
        den *= d;
    }
    const std::int64_t low = numerator.begin()->first;
    for (const auto& [e, c] : numerator) num += UPoly::monomial(c, static_cast<std::size_t>(e - low));
    if (shift >= 0)
        num *= UPoly::monomial(1, static_cast<std::size_t>(shift));
    else
        den *= UPoly::monomial(1, static_cast<std::size_t>(-shift));
    return RationalFunction(std::move(num), std::move(den));
}

FactoredForm operator*(const FactoredForm& a, const FactoredForm& b) {
    check_same_prime(a, b);
    FactoredForm out;
    out.p = a.p;
    out.numerator = multiply(a.numerator, b.numerator);
    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

FactoredForm operator+(const FactoredForm& a, const FactoredForm& b) {
    check_same_prime(a, b);
    FactoredForm out;
    out.p = a.p;
    std::set_union(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                   std::back_inserter(out.factors));
    for (const auto* part : {&a, &b}) {
        std::vector<ExpFactor> missing;
        std::set_difference(out.factors.begin(), out.factors.end(), part->factors.begin(),
                            part->factors.end(), std::back_inserter(missing));
        LaurentPoly term = part->numerator;
        for (const auto& f : missing) term = multiply(term, laurent(f, a.p));
        for (const auto& [e, c] : term) add_term(out.numerator, e, c);
    }
    return out;
}

} // namespace igusa
