#include "gh/matrix_functions.hpp"

#include "gh/errors.hpp"

namespace gh {

Matrix expI(const Matrix& q) {
    const int m = nilpotencyIndex(q);
    const int n = q.rows();
    const Matrix iq = q.scaled(GaussianRational::i());
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int t = 1; t < m; ++t) {
        term = (term * iq).scaled(GaussianRational(makeRational(1, t)));
        sum += term;
    }
    return sum;
}

Matrix logUnipotent(const Matrix& a) {
    if (!isUnipotent(a)) {
        throw SpectrumError("logUnipotent: matrix is not unipotent");
    }
    const int n = a.rows();
    const Matrix nil = Matrix::identity(n) - a;
    const int m = nilpotencyIndex(nil);
    Matrix sum(n, n);
    Matrix power = Matrix::identity(n);
    for (int t = 1; t < m; ++t) {
        power = power * nil;
        sum -= power.scaled(GaussianRational(makeRational(1, t)));
    }
    return sum;
}

Matrix cosK(const Matrix& q, const ExactInteger& k) {
    if (k < 0) {
        throw ArgumentError("cosK: k must be nonnegative");
    }
    const int m = nilpotencyIndex(q);
    const int n = q.rows();
    const ExactRational kSquared(k * k);
    Matrix sum = Matrix::identity(n);
    Matrix qSquaredPower = Matrix::identity(n);
    ExactRational coeff(1);
    for (long j = 1; 2 * j < m; ++j) {
        qSquaredPower = qSquaredPower * q * q;
        coeff *= -kSquared;
        coeff /= ExactRational((2 * j - 1) * (2 * j));
        if (coeff != 0) {
            sum += qSquaredPower.scaled(GaussianRational(coeff));
        }
    }
    return sum;
}

} // namespace gh
