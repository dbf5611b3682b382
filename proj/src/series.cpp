#include "series.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace k3web {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(const Rational& c, int exponent) {
    Polynomial p;
    if (exponent < 0) throw domain_error("monomial exponent must be nonnegative");
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Polynomial Polynomial::one_minus_t_pow(int e) {
    if (e < 1) throw domain_error("exponent in 1-t^e must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c[0] = 1;
    c[static_cast<size_t>(e)] = -1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::exponent_product(const std::vector<int>& exponents) {
    Polynomial p = one();
    for (int e : exponents) p *= one_minus_t_pow(e);
    return p;
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::inflate(int k) const {
    if (k < 1) throw domain_error("inflation factor must be >= 1");
    if (is_zero()) return zero();
    std::vector<Rational> c(static_cast<size_t>(degree()) * k + 1, Rational(0));
    for (int i = 0; i <= degree(); ++i) c[static_cast<size_t>(i) * k] = coeffs_[static_cast<size_t>(i)];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> r = coeffs_;
    for (auto& x : r) x *= c;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    int db = b.degree();
    const Rational& lead = b.coeffs_.back();
    if (static_cast<int>(rem.size()) - 1 < db) return {zero(), a};
    std::vector<Rational> quot(rem.size() - static_cast<size_t>(db), Rational(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        Rational q = rem[static_cast<size_t>(i)] / lead;
        if (q == 0) continue;
        quot[static_cast<size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rational(1) / x.coeffs_.back());  // monic
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << abs;
        } else {
            if (abs != 1) out << abs << "*";
            out << "t";
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string SeriesPrefix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i) out << ", ";
        out << coefficients[i];
    }
    return out.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
}

RationalFunction RationalFunction::canonical() const {
    if (num_.is_zero()) return RationalFunction(Polynomial::zero(), Polynomial::one());
    Polynomial g = Polynomial::gcd(num_, den_);
    Polynomial n = Polynomial::divmod(num_, g).first;
    Polynomial d = Polynomial::divmod(den_, g).first;
    // normalise: lowest nonzero denominator coefficient becomes 1
    Rational low;
    for (int i = 0; i <= d.degree(); ++i) {
        if (d.coeff(i) != 0) {
            low = d.coeff(i);
            break;
        }
    }
    return RationalFunction(n.scaled(Rational(1) / low), d.scaled(Rational(1) / low));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).canonical();
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_).canonical();
}

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_).canonical();
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_).canonical();
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

SeriesPrefix RationalFunction::expand(int order) const {
    if (order < 0) throw domain_error("expansion order must be nonnegative");
    RationalFunction c = canonical();
    if (c.den_.coeff(0) == 0) throw domain_error("pole at origin: series expansion does not exist");
    const Rational d0 = c.den_.coeff(0);
    std::vector<Rational> out(static_cast<size_t>(order) + 1, Rational(0));
    for (int n = 0; n <= order; ++n) {
        Rational acc = c.num_.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= c.den_.coeff(j) * out[static_cast<size_t>(n - j)];
        out[static_cast<size_t>(n)] = acc / d0;
    }
    return SeriesPrefix(std::move(out));
}

Rational RationalFunction::value_at_zero() const {
    RationalFunction c = canonical();
    if (c.den_.coeff(0) == 0) throw domain_error("pole at origin");
    return c.num_.coeff(0) / c.den_.coeff(0);
}

RationalFunction RationalFunction::substitute_reciprocal() const {
    if (num_.is_zero()) return zero();
    int dn = num_.degree();
    int dd = den_.degree();
    int d = std::max(dn, dd);
    // f(1/t) = t^d num(1/t) / (t^d den(1/t))
    Polynomial n = num_.reversed() * Polynomial::monomial(1, d - dn);
    Polynomial m = den_.reversed() * Polynomial::monomial(1, d - dd);
    return RationalFunction(std::move(n), std::move(m));
}

std::string RationalFunction::str() const {
    RationalFunction c = canonical();
    if (c.den_ == Polynomial::one()) return c.num_.str();
    return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
}

}  // namespace k3web
