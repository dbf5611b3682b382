#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace k3web {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Dense univariate polynomial in t over arbitrary-precision rationals.
 *
 * Coefficients are indexed by exponent. The representation is canonical:
 * trailing zero coefficients are trimmed, and the zero polynomial stores
 * an empty coefficient vector (degree -1).
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(1); }
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int exponent);
    // 1 - t^e, e >= 1
    static Polynomial one_minus_t_pow(int e);
    // prod_e (1 - t^e) over a multiset of exponents, all >= 1
    static Polynomial exponent_product(const std::vector<int>& exponents);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // t^degree * p(1/t); zero for the zero polynomial
    Polynomial reversed() const;
    // p(t^k), k >= 1
    Polynomial inflate(int k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial&) const = default;

    Polynomial scaled(const Rational& c) const;

    // quotient/remainder of exact division over the rationals; b nonzero
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // monic gcd over the rationals; gcd(0,0) = 0
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/**
 * Truncated power-series expansion: exact coefficients c_0..c_order.
 */
struct SeriesPrefix {
    std::vector<Rational> coefficients;

    SeriesPrefix() = default;
    explicit SeriesPrefix(std::vector<Rational> c) : coefficients(std::move(c)) {}

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
    const Rational& at(int n) const { return coefficients.at(static_cast<size_t>(n)); }
    bool operator==(const SeriesPrefix&) const = default;

    std::string str() const;
};

/**
 * Exact rational function num/den with a nonzero denominator.
 *
 * Values are kept as constructed; canonical() divides out the polynomial
 * gcd and scales so the lowest nonzero denominator coefficient is 1.
 * Arithmetic results are canonical. Equality is decided by
 * cross-multiplication of the stored (possibly unreduced) forms.
 */
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const Polynomial& num) : num_(num), den_(Polynomial::one()) {}
    /* implicit */ RationalFunction(int n) : num_(Polynomial::constant(n)), den_(Polynomial::one()) {}

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Polynomial::one()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction canonical() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    // exact equality as rational functions (cross-multiplication)
    bool operator==(const RationalFunction& o) const;

    // Taylor coefficients at t=0 up to t^order; requires no pole at the origin
    SeriesPrefix expand(int order) const;

    // value at t=0; requires no pole at the origin
    Rational value_at_zero() const;

    // f(1/t) as a rational function
    RationalFunction substitute_reciprocal() const;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace k3web
