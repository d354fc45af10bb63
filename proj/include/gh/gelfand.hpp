#ifndef GH_GELFAND_HPP
#define GH_GELFAND_HPP

#include <optional>
#include <vector>

#include "gh/growth.hpp"
#include "gh/matrix.hpp"

namespace gh {

// Basis of an invariant subspace generated from a vector.
struct KrylovBasis {
    std::vector<Vector> vectors; // linearly independent
    int dimension = 0;
};

// Basis of span{x, Ax, A^2 x, ...}, extended until the first rank plateau
// (permanent under exact arithmetic). x = 0 yields dimension 0.
KrylovBasis krylovBasis(const Matrix& a, const Vector& x);

// Basis of span{(A^k + A^{-k}) x : k >= 0} for unipotent A. This is the
// cyclic space of x under T = (A + A^{-1})/2 and has dimension
// ceil(m / 2) for m the local nilpotency index of x.
KrylovBasis symmetricSpanBasis(const Matrix& a, const Vector& x);

// T = (A + A^{-1}) / 2 for unipotent A; T is unipotent again.
Matrix averagedOperator(const Matrix& a);

// Exact check of the identity T - I = (A^{-1}/2)(A - I)^2. Holds for every
// unipotent A; exposed as a built-in self-test.
bool factorizationCheck(const Matrix& a);

// Least m >= 1 with (A - I)^m x = 0 for unipotent A; equals the Krylov
// dimension of x. Returns 0 for x = 0.
int localNilpotencyIndex(const Matrix& a, const Vector& x);

enum class Variant { Printed, Derived };
enum class VerifyMode { Theorem, Corollary };

// Annihilation exponent claimed for growth bound O(k^N), N >= 1.
//   printed: N+1 for even N, N+2 for odd N (the statement as printed).
//   derived: N+2 for even N, N+1 for odd N (the sharp parity implied by
//            the Jordan-block dichotomy; see dichotomyTable).
// The two disagree exactly for even N, where the printed exponent admits
// counterexamples such as (J_4(1), e_4, N = 2).
int conclusionExponent(long n, Variant variant);

struct VerificationReport {
    VerifyMode mode = VerifyMode::Theorem;
    Variant variant = Variant::Derived;
    Degree measuredDegree = kDegreeMinusInfinity; // symmetric resp. cosine orbit degree
    int localIndex = 0;                           // 0 for the zero vector
    long testedN = 0;
    int conclusionExponent = 0;
    bool hypothesisSatisfied = false; // measuredDegree <= testedN
    bool annihilated = false;         // residual vector is exactly zero
    std::optional<Vector> witness;    // the nonzero residual when !annihilated
    bool trivialInput = false;        // x = 0; conclusions hold vacuously
};

// Checks the growth hypothesis ||(A^k + A^{-k}) x|| = O(k^N) exactly (as
// degree <= N) and whether (A - I)^e x = 0 for the variant's exponent e.
VerificationReport verifyTheorem(const Matrix& a, const Vector& x, long n, Variant variant);

// Same for nilpotent Q with hypothesis ||cos(kQ) x|| = O(k^N) and residual
// Q^e x; cross-checks the annihilated flag through A = e^{iQ}.
VerificationReport verifyCorollary(const Matrix& q, const Vector& x, long n, Variant variant);

// Measured dichotomy for the cyclic vector e_{d+1} on J_{d+1}(1): forward
// degree d, symmetric degree d or d-1 by parity of d, local index and
// minimal annihilation exponent both d+1. The brute-force oracle behind the
// derived variant.
struct DichotomyRow {
    int d = 0;
    int blockSize = 0;
    Degree forwardDegree;
    Degree symmetricDegree;
    int localIndex = 0;
    int minimalExponent = 0;
};

std::vector<DichotomyRow> dichotomyTable(int dMax);

} // namespace gh

#endif // GH_GELFAND_HPP
