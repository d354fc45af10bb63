#ifndef GH_GROWTH_HPP
#define GH_GROWTH_HPP

#include <optional>
#include <vector>

#include "gh/matrix.hpp"

namespace gh {

// Growth degree of an orbit. Disengaged = the zero orbit, a sentinel that
// compares below every integer (std::optional ordering).
using Degree = std::optional<int>;
inline constexpr Degree kDegreeMinusInfinity = std::nullopt;

// Exact rational-coefficient polynomial in the integer power variable k.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    explicit Polynomial(std::vector<ExactRational> coefficients);

    static Polynomial constant(const ExactRational& c);

    // Trailing zeros are stripped; the zero polynomial has no coefficients.
    const std::vector<ExactRational>& coefficients() const { return coeffs_; }
    ExactRational coefficient(int power) const;
    Degree degree() const;
    bool isZero() const { return coeffs_.empty(); }

    ExactRational evaluate(const ExactInteger& k) const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const ExactRational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void strip();

    std::vector<ExactRational> coeffs_;
};

// Unique polynomial of degree <= samples.size()-1 through the points
// (0, samples[0]), (1, samples[1]), ... via Newton forward differences.
Polynomial interpolateAtIntegers(const std::vector<ExactRational>& samples);

// One orbit coordinate as a function of k, split into real and imaginary
// rational polynomials.
struct CoordinatePolynomial {
    Polynomial realPart;
    Polynomial imagPart;

    GaussianRational evaluate(const ExactInteger& k) const {
        return {realPart.evaluate(k), imagPart.evaluate(k)};
    }
    Degree degree() const { return std::max(realPart.degree(), imagPart.degree()); }
};

enum class OrbitMode { Forward, Inverse, Symmetric, Cosine };

// The closed form of an orbit: one coordinate polynomial per coordinate and
// the resulting exact growth degree of k -> ||orbit(k)||.
struct OrbitProfile {
    OrbitMode mode = OrbitMode::Forward;
    std::vector<CoordinatePolynomial> coordinates;
    Degree degree = kDegreeMinusInfinity;
};

// Single orbit value: A^k x, A^{-k} x, (A^k + A^{-k}) x, or cos(kA) x.
// Inverse and symmetric modes require A unipotent; cosine requires A
// nilpotent.
Vector orbitVector(const Matrix& a, const Vector& x, const ExactInteger& k, OrbitMode mode);

// Orbit values for k = 0..kMax, computed incrementally.
std::vector<Vector> orbitPrefix(const Matrix& a, const Vector& x, int kMax, OrbitMode mode);

// Interpolates every coordinate from samples at k = 0..dim and validates the
// result against three further samples. A validation mismatch means the
// orbit is not polynomial, i.e. the matrix was not unipotent/nilpotent as
// the mode requires; it raises ConsistencyError.
OrbitProfile coordinatePolynomials(const Matrix& a, const Vector& x, OrbitMode mode);

// Max coordinate degree D. The exact orbit norm is bounded between positive
// multiples of k^D for large k; no cancellation is possible in a sum of
// absolute values of polynomials.
Degree growthDegree(const OrbitProfile& profile);

// ||orbit(k)|| = O(k^N), which for polynomial orbits is exactly degree <= N.
bool quasiDominated(const OrbitProfile& profile, long n);

// Independent degree oracle: the highest r whose r-th forward difference is
// not identically zero on the sample window. Requires consecutive-k samples,
// enough of them to cover the degree (at least degree+2).
Degree finiteDifferenceDegree(const std::vector<ExactRational>& samples);

} // namespace gh

#endif // GH_GROWTH_HPP
