#include "gh/gelfand.hpp"

#include <utility>

#include "gh/errors.hpp"
#include "gh/jordan.hpp"
#include "gh/matrix_functions.hpp"

namespace gh {

namespace {

// Row-echelon accumulator for independence tests. Rows keep distinct
// leading positions; insertion reduces against them in pivot order.
class IncrementalRank {
public:
    // True iff v was independent of the rows seen so far.
    bool insert(const Vector& v) {
        Vector w = v;
        for (const auto& [pivot, row] : rows_) {
            if (!w[pivot].isZero()) {
                w -= row.scaled(w[pivot] / row[pivot]);
            }
        }
        int pivot = -1;
        for (int i = 0; i < w.dim(); ++i) {
            if (!w[i].isZero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            return false;
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->first < pivot) {
            ++pos;
        }
        rows_.insert(pos, {pivot, std::move(w)});
        return true;
    }

private:
    std::vector<std::pair<int, Vector>> rows_;
};

// (M^e) x by repeated application.
Vector applyRepeated(const Matrix& m, int e, Vector v) {
    for (int t = 0; t < e; ++t) {
        v = m * v;
    }
    return v;
}

// Least t >= 1 with nil^t x = 0, for nil nilpotent. 0 for x = 0.
int localIndexBy(const Matrix& nil, const Vector& x) {
    Vector w = x;
    int t = 0;
    while (!w.isZero()) {
        w = nil * w;
        ++t;
    }
    return t;
}

} // namespace

KrylovBasis krylovBasis(const Matrix& a, const Vector& x) {
    if (!a.isSquare() || a.rows() != x.dim()) {
        throw ShapeError("krylovBasis: matrix and vector dimensions disagree");
    }
    KrylovBasis basis;
    IncrementalRank tracker;
    Vector v = x;
    for (int step = 0; step <= a.rows(); ++step) {
        if (!tracker.insert(v)) {
            break; // exact arithmetic: the first plateau is permanent
        }
        basis.vectors.push_back(v);
        v = a * v;
    }
    basis.dimension = static_cast<int>(basis.vectors.size());
    return basis;
}

KrylovBasis symmetricSpanBasis(const Matrix& a, const Vector& x) {
    if (!a.isSquare() || a.rows() != x.dim()) {
        throw ShapeError("symmetricSpanBasis: matrix and vector dimensions disagree");
    }
    if (!isUnipotent(a)) {
        throw SpectrumError("symmetricSpanBasis: matrix is not unipotent");
    }
    const Matrix inv = neumannInverse(a);
    KrylovBasis basis;
    IncrementalRank tracker;
    Vector fwd = x;
    Vector bwd = x;
    // s_k = (A^k + A^{-k}) x = 2 T_k((A + A^{-1})/2) x, a Krylov sequence of
    // the averaged operator, so stopping at the first plateau is sound.
    for (int step = 0; step <= a.rows(); ++step) {
        Vector s = fwd + bwd;
        if (!tracker.insert(s)) {
            break;
        }
        basis.vectors.push_back(std::move(s));
        fwd = a * fwd;
        bwd = inv * bwd;
    }
    basis.dimension = static_cast<int>(basis.vectors.size());
    return basis;
}

Matrix averagedOperator(const Matrix& a) {
    if (!isUnipotent(a)) {
        throw SpectrumError("averagedOperator: matrix is not unipotent");
    }
    return (a + neumannInverse(a)).scaled(GaussianRational(makeRational(1, 2)));
}

bool factorizationCheck(const Matrix& a) {
    if (!isUnipotent(a)) {
        throw SpectrumError("factorizationCheck: matrix is not unipotent");
    }
    const Matrix identity = Matrix::identity(a.rows());
    const Matrix lhs = averagedOperator(a) - identity;
    const Matrix shifted = a - identity;
    const Matrix rhs =
        neumannInverse(a).scaled(GaussianRational(makeRational(1, 2))) * shifted * shifted;
    return lhs == rhs;
}

int localNilpotencyIndex(const Matrix& a, const Vector& x) {
    if (!a.isSquare() || a.rows() != x.dim()) {
        throw ShapeError("localNilpotencyIndex: matrix and vector dimensions disagree");
    }
    if (!isUnipotent(a)) {
        throw SpectrumError("localNilpotencyIndex: matrix is not unipotent");
    }
    return localIndexBy(a - Matrix::identity(a.rows()), x);
}

int conclusionExponent(long n, Variant variant) {
    if (n < 1) {
        throw ArgumentError("conclusionExponent: N must be a positive integer");
    }
    const bool even = (n % 2 == 0);
    if (variant == Variant::Printed) {
        return static_cast<int>(even ? n + 1 : n + 2);
    }
    return static_cast<int>(even ? n + 2 : n + 1);
}

namespace {

VerificationReport verifyResidual(const Matrix& nil, const Vector& x, long n, Variant variant,
                                  VerifyMode mode, OrbitMode orbitMode, const Matrix& orbitMatrix) {
    VerificationReport report;
    report.mode = mode;
    report.variant = variant;
    report.testedN = n;
    report.conclusionExponent = conclusionExponent(n, variant);
    if (x.isZero()) {
        report.trivialInput = true;
        report.hypothesisSatisfied = true;
        report.annihilated = true;
        return report;
    }
    const OrbitProfile profile = coordinatePolynomials(orbitMatrix, x, orbitMode);
    report.measuredDegree = profile.degree;
    report.localIndex = localIndexBy(nil, x);
    report.hypothesisSatisfied = quasiDominated(profile, n);
    Vector residual = applyRepeated(nil, report.conclusionExponent, x);
    report.annihilated = residual.isZero();
    if (!report.annihilated) {
        report.witness = std::move(residual);
    }
    return report;
}

} // namespace

VerificationReport verifyTheorem(const Matrix& a, const Vector& x, long n, Variant variant) {
    if (!a.isSquare() || a.rows() != x.dim()) {
        throw ShapeError("verifyTheorem: matrix and vector dimensions disagree");
    }
    if (!isUnipotent(a)) {
        throw SpectrumError("verifyTheorem: matrix is not unipotent");
    }
    return verifyResidual(a - Matrix::identity(a.rows()), x, n, variant, VerifyMode::Theorem,
                          OrbitMode::Symmetric, a);
}

VerificationReport verifyCorollary(const Matrix& q, const Vector& x, long n, Variant variant) {
    if (!q.isSquare() || q.rows() != x.dim()) {
        throw ShapeError("verifyCorollary: matrix and vector dimensions disagree");
    }
    nilpotencyIndex(q); // SpectrumError when not nilpotent
    VerificationReport report =
        verifyResidual(q, x, n, variant, VerifyMode::Corollary, OrbitMode::Cosine, q);
    // The reduction through A = e^{iQ} must reach the same conclusion:
    // A - I = iQ * (invertible), so Q^e x = 0 iff (A - I)^e x = 0.
    const VerificationReport viaTheorem = verifyTheorem(expI(q), x, n, report.variant);
    if (viaTheorem.annihilated != report.annihilated) {
        throw ConsistencyError("verifyCorollary: disagreement with the e^{iQ} reduction");
    }
    return report;
}

std::vector<DichotomyRow> dichotomyTable(int dMax) {
    if (dMax < 0) {
        throw ArgumentError("dichotomyTable: dMax must be nonnegative");
    }
    std::vector<DichotomyRow> rows;
    rows.reserve(static_cast<std::size_t>(dMax) + 1);
    for (int d = 0; d <= dMax; ++d) {
        const int size = d + 1;
        const Matrix block = jordanBlock(size, 1);
        const Vector cyclic = Vector::unit(size, size - 1);
        DichotomyRow row;
        row.d = d;
        row.blockSize = size;
        row.forwardDegree = coordinatePolynomials(block, cyclic, OrbitMode::Forward).degree;
        row.symmetricDegree = coordinatePolynomials(block, cyclic, OrbitMode::Symmetric).degree;
        row.localIndex = localNilpotencyIndex(block, cyclic);
        // Second route to the same quantity, through explicit powers.
        const Matrix shifted = block - Matrix::identity(size);
        int e = 1;
        while (!(matpow(shifted, e) * cyclic).isZero()) {
            ++e;
        }
        row.minimalExponent = e;
        rows.push_back(row);
    }
    return rows;
}

} // namespace gh
