#ifndef GH_SCALARS_HPP
#define GH_SCALARS_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "gh/errors.hpp"

namespace gh {

// Exact arbitrary-precision scalars. Integers and rationals are GMP;
// rationals are kept canonical (denominator > 0, lowest terms) by
// construction and by every arithmetic operation.
using ExactInteger = mpz_class;
using ExactRational = mpq_class;

// num/den as a canonical rational. den must be nonzero.
ExactRational makeRational(const ExactInteger& num, const ExactInteger& den);

inline ExactRational ratAbs(const ExactRational& q) {
    return q < 0 ? ExactRational(-q) : q;
}

// C(k, j) extended as a polynomial in k through the falling-factorial
// product k(k-1)...(k-j+1)/j!, so that C(k, j) = 0 whenever 0 <= k < j.
ExactInteger binomial(const ExactInteger& k, const ExactInteger& j);

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(ExactRational re) : re_(std::move(re)), im_(0) {} // NOLINT
    GaussianRational(ExactRational re, ExactRational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {ExactRational(0), ExactRational(1)}; }

    const ExactRational& re() const { return re_; }
    const ExactRational& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, ExactRational(-im_)}; }

    // Exact whenever the value is nonzero; divides by re^2 + im^2.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {ExactRational(-re_), ExactRational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

private:
    ExactRational re_;
    ExactRational im_;
};

// |re(z)| + |im(z)|. Exact norm surrogate: nonnegative, zero iff z = 0,
// and within a factor of 2 of multiplicativity, which is all that degree
// arguments need.
ExactRational abs1(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace gh

#endif // GH_SCALARS_HPP
