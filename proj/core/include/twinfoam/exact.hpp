#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "twinfoam/errors.hpp"

namespace twinfoam {

using Rational = mpq_class;
using Integer = mpz_class;

// Builds a rational in lowest terms; the only safe way to construct one from
// a numerator/denominator pair (mpq_class does not canonicalize on its own).
Rational make_rational(const Integer& num, const Integer& den);

/// An element of Q(i): re + im*i with both parts exact rationals in lowest terms.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long value) : re_(value), im_(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {} // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2 = re^2 + im^2, as a rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational inv() const;
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Renders as "p/q+r/s*i" with zero parts suppressed ("0" for zero),
    // unit denominators dropped and unit imaginary coefficients written as "i".
    std::string to_string() const;

    // Parses the forms produced by to_string (also accepts an optional '*'
    // before 'i' and surrounding whitespace). Throws InputError.
    static GaussianRational parse(std::string_view text);

private:
    Rational re_;
    Rational im_;
};

/// A Laurent polynomial in q with exact integer coefficients.
/// No zero coefficients are ever stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) coeffs_[0] = constant;
    }

    // c * q^e
    static LaurentPolynomial monomial(Integer coeff, int exponent);
    static LaurentPolynomial q(int exponent = 1) { return monomial(1, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    Integer coeff(int exponent) const;
    const std::map<int, Integer>& terms() const { return coeffs_; }

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial pow(unsigned exponent) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // Substitutes an exact value for q. Negative exponents require a nonzero value.
    GaussianRational eval(const GaussianRational& q_value) const;

    // Sorted monomial list, ascending exponent: "q^-1 + q", "q^2 - 2 + q^-2", "0".
    std::string to_string() const;

private:
    std::map<int, Integer> coeffs_;
};

} // namespace twinfoam
