#include "gh/jordan.hpp"

#include <numeric>
#include <random>

#include "gh/errors.hpp"

namespace gh {

int JordanSpec::dimension() const {
    return std::accumulate(blockSizes.begin(), blockSizes.end(), 0);
}

void JordanSpec::validate() const {
    if (eigenvalue != 0 && eigenvalue != 1) {
        throw ArgumentError("JordanSpec: eigenvalue must be 0 or 1");
    }
    if (blockSizes.empty()) {
        throw ArgumentError("JordanSpec: block list must be nonempty");
    }
    for (int s : blockSizes) {
        if (s < 1) {
            throw ArgumentError("JordanSpec: block sizes must be positive");
        }
    }
}

Matrix jordanBlock(int size, int eigenvalue) {
    if (size < 1) {
        throw ArgumentError("jordanBlock: size must be positive");
    }
    if (eigenvalue != 0 && eigenvalue != 1) {
        throw ArgumentError("jordanBlock: eigenvalue must be 0 or 1");
    }
    Matrix m(size, size);
    for (int i = 0; i < size; ++i) {
        m(i, i) = GaussianRational(eigenvalue);
        if (i + 1 < size) {
            m(i, i + 1) = GaussianRational(1);
        }
    }
    return m;
}

namespace {

Matrix directSum(const JordanSpec& spec) {
    const int n = spec.dimension();
    Matrix m(n, n);
    int offset = 0;
    for (int size : spec.blockSizes) {
        for (int i = 0; i < size; ++i) {
            m(offset + i, offset + i) = GaussianRational(spec.eigenvalue);
            if (i + 1 < size) {
                m(offset + i, offset + i + 1) = GaussianRational(1);
            }
        }
        offset += size;
    }
    return m;
}

// Raw generator draws, not std::uniform_int_distribution: the engine output
// is pinned by the standard, the distributions are not, and assembled
// instances must be bit-reproducible across toolchains.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

} // namespace

AssembledInstance assemble(const JordanSpec& spec) {
    spec.validate();
    const int n = spec.dimension();
    Matrix j = directSum(spec);
    Matrix s = Matrix::identity(n);
    if (!spec.conjugatorSeed || n == 1) {
        return {j, s};
    }

    Matrix sInv = Matrix::identity(n);
    std::mt19937_64 rng(*spec.conjugatorSeed);
    static const int kCoeffs[4] = {-2, -1, 1, 2};
    for (int t = 0; t < 3 * n; ++t) {
        const int src = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
        int dst = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1)));
        if (dst >= src) {
            ++dst;
        }
        const GaussianRational c(kCoeffs[draw(rng, 4)]);
        // S <- E S with E adding c * row src to row dst; accumulate the
        // inverse on the right: Sinv <- Sinv E^{-1}, a column operation.
        for (int col = 0; col < n; ++col) {
            s(dst, col) += c * s(src, col);
        }
        for (int row = 0; row < n; ++row) {
            sInv(row, src) -= c * sInv(row, dst);
        }
    }
    return {s * j * sInv, s};
}

Matrix jordanPowerClosed(int d, const ExactInteger& k, PowerDirection direction) {
    if (d < 0) {
        throw ArgumentError("jordanPowerClosed: d must be nonnegative");
    }
    if (k < 0) {
        throw ArgumentError("jordanPowerClosed: k must be nonnegative");
    }
    const int n = d + 1;
    Matrix m(n, n);
    for (int j = 0; j <= d; ++j) {
        GaussianRational entry;
        if (j == 0) {
            entry = GaussianRational(1); // C(k,0) and C(k-1,0) both extend to 1
        } else if (direction == PowerDirection::Forward) {
            entry = GaussianRational(ExactRational(binomial(k, j)));
        } else {
            ExactInteger b = binomial(k + j - 1, j);
            entry = GaussianRational(ExactRational(j % 2 == 0 ? b : -b));
        }
        for (int i = 0; i + j < n; ++i) {
            m(i, i + j) = entry;
        }
    }
    return m;
}

Matrix symmetricPowerClosed(int d, const ExactInteger& k) {
    return jordanPowerClosed(d, k, PowerDirection::Forward) +
           jordanPowerClosed(d, k, PowerDirection::Inverse);
}

bool isCyclicForBlock(const Vector& x) {
    return !x[x.dim() - 1].isZero();
}

int predictedSymmetricDegree(int d) {
    if (d < 0) {
        throw ArgumentError("predictedSymmetricDegree: d must be nonnegative");
    }
    return 2 * (d / 2);
}

JordanSpec seededSpec(std::uint64_t seed, int maxDim, int eigenvalue) {
    if (maxDim < 1) {
        throw ArgumentError("seededSpec: maxDim must be positive");
    }
    std::mt19937_64 rng(seed);
    JordanSpec spec;
    spec.eigenvalue = eigenvalue;
    int remaining = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(maxDim)));
    while (remaining > 0) {
        const int part = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(remaining)));
        spec.blockSizes.push_back(part);
        remaining -= part;
    }
    spec.conjugatorSeed = rng();
    return spec;
}

Vector seededVector(std::uint64_t seed, int dim) {
    std::mt19937_64 rng(seed);
    Vector x(dim);
    for (int i = 0; i < dim; ++i) {
        const long re = static_cast<long>(draw(rng, 7)) - 3;  // -3..3
        const long im = static_cast<long>(draw(rng, 3)) - 1;  // -1..1
        x[i] = GaussianRational(ExactRational(re), ExactRational(im));
    }
    if (x.isZero()) {
        x[dim - 1] = GaussianRational(1);
    }
    return x;
}

} // namespace gh
