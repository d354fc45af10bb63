#include "gh/matrix.hpp"

#include <ostream>
#include <utility>

#include "gh/errors.hpp"

namespace gh {

Vector::Vector(int dim) {
    if (dim < 1) {
        throw ArgumentError("Vector: dimension must be positive");
    }
    entries_.resize(static_cast<std::size_t>(dim));
}

Vector::Vector(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw ArgumentError("Vector: dimension must be positive");
    }
}

Vector Vector::unit(int dim, int index) {
    Vector v(dim);
    if (index < 0 || index >= dim) {
        throw ArgumentError("Vector::unit: index out of range");
    }
    v[index] = GaussianRational(1);
    return v;
}

bool Vector::isZero() const {
    for (const auto& e : entries_) {
        if (!e.isZero()) {
            return false;
        }
    }
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) {
        throw ShapeError("Vector: dimension mismatch in addition");
    }
    for (int i = 0; i < dim(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) {
        throw ShapeError("Vector: dimension mismatch in subtraction");
    }
    for (int i = 0; i < dim(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

Vector Vector::scaled(const GaussianRational& c) const {
    Vector out = *this;
    for (auto& e : out.entries_) {
        e *= c;
    }
    return out;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw ArgumentError("Matrix: dimensions must be positive");
    }
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = GaussianRational(1);
    }
    return m;
}

Matrix Matrix::zero(int rows, int cols) {
    return Matrix(rows, cols);
}

bool Matrix::isZero() const {
    for (const auto& e : entries_) {
        if (!e.isZero()) {
            return false;
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw ShapeError("Matrix: shape mismatch in addition");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw ShapeError("Matrix: shape mismatch in subtraction");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
        throw ShapeError("Matrix: inner dimensions disagree in product");
    }
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& aik = (*this)(i, k);
            if (aik.isZero()) {
                continue;
            }
            for (int j = 0; j < o.cols_; ++j) {
                if (!o(k, j).isZero()) {
                    out(i, j) += aik * o(k, j);
                }
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.dim()) {
        throw ShapeError("Matrix: inner dimensions disagree in matrix-vector product");
    }
    Vector out(rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (!(*this)(i, k).isZero() && !v[k].isZero()) {
                out[i] += (*this)(i, k) * v[k];
            }
        }
    }
    return out;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
    Matrix out = *this;
    for (auto& e : out.entries_) {
        e *= c;
    }
    return out;
}

Matrix matpow(const Matrix& a, const ExactInteger& k) {
    if (!a.isSquare()) {
        throw ShapeError("matpow: matrix must be square");
    }
    if (k < 0) {
        throw ArgumentError("matpow: exponent must be nonnegative");
    }
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    ExactInteger e = k;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            result = result * base;
        }
        e /= 2;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

int nilpotencyIndex(const Matrix& m) {
    if (!m.isSquare()) {
        throw ShapeError("nilpotencyIndex: matrix must be square");
    }
    const int n = m.rows();
    Matrix p = m;
    for (int step = 1; step <= n; ++step) {
        if (p.isZero()) {
            return step;
        }
        if (step < n) {
            p = p * m;
        }
    }
    throw SpectrumError("nilpotencyIndex: matrix is not nilpotent");
}

bool isUnipotent(const Matrix& a) {
    if (!a.isSquare()) {
        throw ShapeError("isUnipotent: matrix must be square");
    }
    Matrix b = a - Matrix::identity(a.rows());
    return matpow(b, a.rows()).isZero();
}

Matrix neumannInverse(const Matrix& a) {
    if (!isUnipotent(a)) {
        throw SpectrumError("neumannInverse: matrix is not unipotent, series would not terminate");
    }
    const Matrix n = Matrix::identity(a.rows()) - a;
    Matrix sum = Matrix::identity(a.rows());
    Matrix p = n;
    while (!p.isZero()) {
        sum += p;
        p = p * n;
    }
    return sum;
}

namespace {

struct EchelonResult {
    Matrix m;
    std::vector<int> pivotCols;
    int swaps = 0;
};

// Fraction-free (Bareiss) forward elimination with first-nonzero pivot
// selection. On Gaussian-integer input all intermediate entries are
// minors of the input, so they stay Gaussian integers.
EchelonResult eliminate(Matrix w) {
    const int rows = w.rows();
    const int cols = w.cols();
    EchelonResult res{std::move(w), {}, 0};
    Matrix& m = res.m;
    GaussianRational prev(1);
    int pr = 0;
    for (int col = 0; col < cols && pr < rows; ++col) {
        int sel = -1;
        for (int i = pr; i < rows; ++i) {
            if (!m(i, col).isZero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        if (sel != pr) {
            for (int j = 0; j < cols; ++j) {
                std::swap(m(sel, j), m(pr, j));
            }
            ++res.swaps;
        }
        const GaussianRational pivot = m(pr, col);
        for (int i = pr + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                m(i, j) = (pivot * m(i, j) - m(i, col) * m(pr, j)) / prev;
            }
            m(i, col) = GaussianRational();
        }
        prev = pivot;
        res.pivotCols.push_back(col);
        ++pr;
    }
    return res;
}

} // namespace

RankKernel rankAndKernel(const Matrix& m) {
    const int cols = m.cols();
    EchelonResult ech = eliminate(m);
    RankKernel out;
    out.rank = static_cast<int>(ech.pivotCols.size());

    std::vector<bool> isPivotCol(static_cast<std::size_t>(cols), false);
    for (int pc : ech.pivotCols) {
        isPivotCol[static_cast<std::size_t>(pc)] = true;
    }
    for (int f = 0; f < cols; ++f) {
        if (isPivotCol[static_cast<std::size_t>(f)]) {
            continue;
        }
        Vector v(cols);
        v[f] = GaussianRational(1);
        for (int p = out.rank - 1; p >= 0; --p) {
            const int pc = ech.pivotCols[static_cast<std::size_t>(p)];
            GaussianRational s;
            for (int j = pc + 1; j < cols; ++j) {
                if (!ech.m(p, j).isZero() && !v[j].isZero()) {
                    s += ech.m(p, j) * v[j];
                }
            }
            v[pc] = s.isZero() ? GaussianRational() : -(s / ech.m(p, pc));
        }
        out.kernelBasis.push_back(std::move(v));
    }
    return out;
}

GaussianRational determinant(const Matrix& m) {
    if (!m.isSquare()) {
        throw ShapeError("determinant: matrix must be square");
    }
    const int n = m.rows();
    EchelonResult ech = eliminate(m);
    if (static_cast<int>(ech.pivotCols.size()) < n) {
        return GaussianRational();
    }
    // With no column skips the final Bareiss pivot is the determinant of
    // the row-permuted matrix.
    GaussianRational det = ech.m(n - 1, n - 1);
    return (ech.swaps % 2 == 0) ? det : -det;
}

ExactRational vecNorm(const Vector& v) {
    ExactRational sum(0);
    for (int i = 0; i < v.dim(); ++i) {
        sum += abs1(v[i]);
    }
    return sum;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << v[i];
    }
    return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i > 0) {
            os << "; ";
        }
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                os << ", ";
            }
            os << m(i, j);
        }
    }
    return os << "]";
}

} // namespace gh
