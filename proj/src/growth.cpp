#include "gh/growth.hpp"

#include <utility>

#include "gh/errors.hpp"
#include "gh/matrix_functions.hpp"

namespace gh {

Polynomial::Polynomial(std::vector<ExactRational> coefficients)
    : coeffs_(std::move(coefficients)) {
    strip();
}

Polynomial Polynomial::constant(const ExactRational& c) {
    return Polynomial(std::vector<ExactRational>{c});
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

ExactRational Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return ExactRational(0);
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

Degree Polynomial::degree() const {
    if (coeffs_.empty()) {
        return kDegreeMinusInfinity;
    }
    return static_cast<int>(coeffs_.size()) - 1;
}

ExactRational Polynomial::evaluate(const ExactInteger& k) const {
    ExactRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= k;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), ExactRational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    strip();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (isZero() || o.isZero()) {
        return Polynomial();
    }
    std::vector<ExactRational> out(coeffs_.size() + o.coeffs_.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const ExactRational& c) const {
    std::vector<ExactRational> out = coeffs_;
    for (auto& e : out) {
        e *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial interpolateAtIntegers(const std::vector<ExactRational>& samples) {
    if (samples.empty()) {
        throw ArgumentError("interpolateAtIntegers: no samples");
    }
    // Newton forward form: p(k) = sum_j (D^j s)(0) * C(k, j), with C(k, j)
    // expanded as the falling factorial over j!.
    std::vector<ExactRational> diffs = samples;
    Polynomial result;
    Polynomial falling = Polynomial::constant(ExactRational(1));
    ExactRational factorial(1);
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (j > 0) {
            for (std::size_t i = 0; i + j < samples.size(); ++i) {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
            // falling *= (k - (j-1))
            falling = falling * Polynomial({ExactRational(-static_cast<long>(j - 1)), ExactRational(1)});
            factorial *= static_cast<long>(j);
        }
        if (diffs[0] != 0) {
            result += falling.scaled(diffs[0] / factorial);
        }
    }
    return result;
}

namespace {

const char* modeName(OrbitMode mode) {
    switch (mode) {
    case OrbitMode::Forward:
        return "forward";
    case OrbitMode::Inverse:
        return "inverse";
    case OrbitMode::Symmetric:
        return "symmetric";
    case OrbitMode::Cosine:
        return "cosine";
    }
    return "?";
}

// Incremental orbit evaluation shared by orbitPrefix and the profile
// builder. Cosine mode precomputes Q^{2j} x once and rescales per k.
class OrbitSampler {
public:
    OrbitSampler(const Matrix& a, const Vector& x, OrbitMode mode) : a_(a), mode_(mode) {
        if (!a.isSquare() || a.rows() != x.dim()) {
            throw ShapeError("orbit: matrix and vector dimensions disagree");
        }
        switch (mode) {
        case OrbitMode::Forward:
            fwd_.emplace_back(x);
            break;
        case OrbitMode::Inverse:
        case OrbitMode::Symmetric:
            if (!isUnipotent(a)) {
                throw SpectrumError("orbit: inverse powers require a unipotent matrix");
            }
            inverse_ = neumannInverse(a);
            fwd_.emplace_back(x);
            bwd_.emplace_back(x);
            break;
        case OrbitMode::Cosine: {
            const int m = nilpotencyIndex(a); // SpectrumError when not nilpotent
            Vector u = x;
            evenPowers_.push_back(u);
            for (int twoJ = 2; twoJ < m; twoJ += 2) {
                u = a * (a * u);
                evenPowers_.push_back(u);
            }
            break;
        }
        }
    }

    Vector at(int k) {
        if (mode_ == OrbitMode::Cosine) {
            return cosineAt(k);
        }
        extendTo(k);
        switch (mode_) {
        case OrbitMode::Forward:
            return fwd_[static_cast<std::size_t>(k)];
        case OrbitMode::Inverse:
            return bwd_[static_cast<std::size_t>(k)];
        default:
            return fwd_[static_cast<std::size_t>(k)] + bwd_[static_cast<std::size_t>(k)];
        }
    }

private:
    void extendTo(int k) {
        while (static_cast<int>(fwd_.size()) <= k && !fwd_.empty()) {
            fwd_.push_back(a_ * fwd_.back());
            if (!bwd_.empty()) {
                bwd_.push_back(*inverse_ * bwd_.back());
            }
        }
    }

    Vector cosineAt(int k) const {
        // cos(kQ) x = sum_j (-1)^j k^{2j} / (2j)! * Q^{2j} x
        Vector out = evenPowers_[0];
        ExactRational coeff(1);
        const ExactRational kSquared(ExactInteger(k) * ExactInteger(k));
        for (std::size_t j = 1; j < evenPowers_.size(); ++j) {
            const long twoJ = static_cast<long>(2 * j);
            coeff *= -kSquared;
            coeff /= ExactRational((twoJ - 1) * twoJ);
            if (coeff != 0) {
                out += evenPowers_[j].scaled(GaussianRational(coeff));
            }
        }
        return out;
    }

    const Matrix& a_;
    OrbitMode mode_;
    std::optional<Matrix> inverse_;
    std::vector<Vector> fwd_;
    std::vector<Vector> bwd_;
    std::vector<Vector> evenPowers_;
};

} // namespace

Vector orbitVector(const Matrix& a, const Vector& x, const ExactInteger& k, OrbitMode mode) {
    if (k < 0) {
        throw ArgumentError("orbitVector: k must be nonnegative");
    }
    if (!a.isSquare() || a.rows() != x.dim()) {
        throw ShapeError("orbitVector: matrix and vector dimensions disagree");
    }
    switch (mode) {
    case OrbitMode::Forward:
        return matpow(a, k) * x;
    case OrbitMode::Inverse:
        return matpow(neumannInverse(a), k) * x;
    case OrbitMode::Symmetric:
        return matpow(a, k) * x + matpow(neumannInverse(a), k) * x;
    case OrbitMode::Cosine:
        return cosK(a, k) * x;
    }
    throw ArgumentError("orbitVector: unknown mode");
}

std::vector<Vector> orbitPrefix(const Matrix& a, const Vector& x, int kMax, OrbitMode mode) {
    if (kMax < 0) {
        throw ArgumentError("orbitPrefix: kMax must be nonnegative");
    }
    OrbitSampler sampler(a, x, mode);
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(kMax) + 1);
    for (int k = 0; k <= kMax; ++k) {
        out.push_back(sampler.at(k));
    }
    return out;
}

OrbitProfile coordinatePolynomials(const Matrix& a, const Vector& x, OrbitMode mode) {
    const int n = x.dim();
    // Coordinates are polynomials of degree at most n-1; interpolate on
    // k = 0..n and keep three later samples as validation witnesses.
    const std::vector<Vector> samples = orbitPrefix(a, x, 2 * n + 5, mode);

    OrbitProfile profile;
    profile.mode = mode;
    profile.coordinates.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        std::vector<ExactRational> re;
        std::vector<ExactRational> im;
        re.reserve(static_cast<std::size_t>(n) + 1);
        im.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            re.push_back(samples[static_cast<std::size_t>(k)][c].re());
            im.push_back(samples[static_cast<std::size_t>(k)][c].im());
        }
        CoordinatePolynomial poly{interpolateAtIntegers(re), interpolateAtIntegers(im)};
        for (int k : {n + 1, n + 2, 2 * n + 5}) {
            if (poly.evaluate(k) != samples[static_cast<std::size_t>(k)][c]) {
                throw ConsistencyError(
                    std::string("coordinatePolynomials: ") + modeName(mode) +
                    " orbit is not polynomial; the matrix does not satisfy the mode's "
                    "spectral assumption");
            }
        }
        profile.degree = std::max(profile.degree, poly.degree());
        profile.coordinates.push_back(std::move(poly));
    }
    return profile;
}

Degree growthDegree(const OrbitProfile& profile) {
    return profile.degree;
}

bool quasiDominated(const OrbitProfile& profile, long n) {
    if (n < 0) {
        throw ArgumentError("quasiDominated: N must be nonnegative");
    }
    return !profile.degree.has_value() || *profile.degree <= n;
}

Degree finiteDifferenceDegree(const std::vector<ExactRational>& samples) {
    if (samples.size() < 2) {
        throw ArgumentError("finiteDifferenceDegree: need at least two samples");
    }
    std::vector<ExactRational> level = samples;
    Degree last = kDegreeMinusInfinity;
    for (int r = 0;; ++r) {
        bool nonzero = false;
        for (const auto& v : level) {
            if (v != 0) {
                nonzero = true;
                break;
            }
        }
        if (!nonzero) {
            break; // all deeper differences vanish too
        }
        last = r;
        if (level.size() == 1) {
            break;
        }
        for (std::size_t i = 0; i + 1 < level.size(); ++i) {
            level[i] = level[i + 1] - level[i];
        }
        level.pop_back();
    }
    return last;
}

} // namespace gh
