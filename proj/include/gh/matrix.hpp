#ifndef GH_MATRIX_HPP
#define GH_MATRIX_HPP

#include <iosfwd>
#include <vector>

#include "gh/scalars.hpp"

namespace gh {

// Dense column vector over Q(i).
class Vector {
public:
    explicit Vector(int dim);
    explicit Vector(std::vector<GaussianRational> entries);

    static Vector unit(int dim, int index); // e_{index+1}, 0-based index

    int dim() const { return static_cast<int>(entries_.size()); }
    const GaussianRational& operator[](int i) const { return entries_[i]; }
    GaussianRational& operator[](int i) { return entries_[i]; }
    const std::vector<GaussianRational>& entries() const { return entries_; }

    bool isZero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    Vector scaled(const GaussianRational& c) const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    std::vector<GaussianRational> entries_;
};

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }
    bool isZero() const;

    const GaussianRational& operator()(int r, int c) const { return entries_[idx(r, c)]; }
    GaussianRational& operator()(int r, int c) { return entries_[idx(r, c)]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix scaled(const GaussianRational& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    int rows_;
    int cols_;
    std::vector<GaussianRational> entries_;
};

// A^k by binary exponentiation, k >= 0; A^0 = identity.
Matrix matpow(const Matrix& a, const ExactInteger& k);

// A^{-1} = sum_{n=0}^{m-1} (I-A)^n where m is the nilpotency index of I-A.
// Requires A unipotent; the series would not terminate otherwise.
Matrix neumannInverse(const Matrix& a);

// Least m >= 1 with M^m = 0. Throws SpectrumError when M^dim != 0 (by
// Cayley-Hamilton a nilpotent matrix satisfies M^dim = 0).
int nilpotencyIndex(const Matrix& m);

// True iff (A - I)^dim = 0, i.e. the spectrum is exactly {1}.
bool isUnipotent(const Matrix& a);

struct RankKernel {
    int rank = 0;
    std::vector<Vector> kernelBasis;
};

// Exact rank and a null-space basis over Q(i), by fraction-free (Bareiss)
// elimination with first-nonzero pivoting. rank + kernelBasis.size() = cols.
RankKernel rankAndKernel(const Matrix& m);

// Determinant of a square matrix (fraction-free elimination).
GaussianRational determinant(const Matrix& m);

// The fixed exact norm: sum_i abs1(v_i). Zero iff v = 0.
ExactRational vecNorm(const Vector& v);

std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace gh

#endif // GH_MATRIX_HPP
