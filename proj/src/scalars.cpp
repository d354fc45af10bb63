#include "gh/scalars.hpp"

#include <ostream>
#include <utility>

namespace gh {

ExactRational makeRational(const ExactInteger& num, const ExactInteger& den) {
    if (den == 0) {
        throw ArgumentError("makeRational: zero denominator");
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

ExactInteger binomial(const ExactInteger& k, const ExactInteger& j) {
    if (k < 0 || j < 0) {
        throw ArgumentError("binomial: negative argument");
    }
    if (j > k) {
        return 0;
    }
    // Falling factorial k(k-1)...(k-j+1) divided by j!. Dividing by t at
    // step t keeps intermediates integral: after t factors the product is
    // C(k, t) * t!... / (t-1)! which t divides exactly.
    ExactInteger result(1);
    ExactInteger factor(k);
    for (ExactInteger t(1); t <= j; ++t) {
        result *= factor;
        result /= t;
        --factor;
    }
    return result;
}

GaussianRational GaussianRational::inverse() const {
    if (isZero()) {
        throw ArgumentError("GaussianRational: inverse of zero");
    }
    ExactRational n = re_ * re_ + im_ * im_;
    return {ExactRational(re_ / n), ExactRational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    ExactRational re = re_ * o.re_ - im_ * o.im_;
    ExactRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

ExactRational abs1(const GaussianRational& z) {
    return ratAbs(z.re()) + ratAbs(z.im());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    os << z.re().get_str();
    if (z.im() != 0) {
        os << (z.im() > 0 ? "+" : "") << z.im().get_str() << "i";
    }
    return os;
}

} // namespace gh
