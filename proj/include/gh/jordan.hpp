#ifndef GH_JORDAN_HPP
#define GH_JORDAN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gh/matrix.hpp"

namespace gh {

// A matrix described as a direct sum of Jordan blocks with a common
// eigenvalue in {0, 1}, optionally conjugated by a seeded unimodular matrix.
struct JordanSpec {
    int eigenvalue = 1; // 0 (nilpotent) or 1 (unipotent)
    std::vector<int> blockSizes;
    std::optional<std::uint64_t> conjugatorSeed;

    int dimension() const;
    void validate() const; // throws ArgumentError
};

// size x size block with `eigenvalue` on the diagonal and 1 on the first
// superdiagonal.
Matrix jordanBlock(int size, int eigenvalue);

struct AssembledInstance {
    Matrix matrix;     // S * J * S^{-1}
    Matrix conjugator; // S, integer with det +-1; identity when no seed
};

// Direct sum of the blocks, conjugated by a unimodular S generated
// deterministically from the seed (3*dim elementary row additions with
// coefficients in {-2,-1,1,2}).
AssembledInstance assemble(const JordanSpec& spec);

enum class PowerDirection { Forward, Inverse };

// Closed form of J_{d+1}(1)^k (forward) and J_{d+1}(1)^{-k} (inverse):
// entry (i, i+j) is C(k, j), respectively (-1)^j C(k+j-1, j). Binomials are
// evaluated through the falling-factorial extension, so the identities hold
// for every k >= 0, not only k > d.
Matrix jordanPowerClosed(int d, const ExactInteger& k, PowerDirection direction);

// Closed form of J_{d+1}(1)^k + J_{d+1}(1)^{-k}. Diagonal entries are 2 and
// the first superdiagonal vanishes identically.
Matrix symmetricPowerClosed(int d, const ExactInteger& k);

// A vector is cyclic for a single Jordan block iff its last coordinate is
// nonzero.
bool isCyclicForBlock(const Vector& x);

// Exact growth degree of k -> ||(J_{d+1}(1)^k + J_{d+1}(1)^{-k}) x|| for
// cyclic x: d when d is even, d-1 when d is odd.
int predictedSymmetricDegree(int d);

// Deterministic generators for seeded test instances.
JordanSpec seededSpec(std::uint64_t seed, int maxDim, int eigenvalue);
Vector seededVector(std::uint64_t seed, int dim); // never the zero vector

} // namespace gh

#endif // GH_JORDAN_HPP
