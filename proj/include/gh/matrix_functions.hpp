#ifndef GH_MATRIX_FUNCTIONS_HPP
#define GH_MATRIX_FUNCTIONS_HPP

#include "gh/matrix.hpp"

namespace gh {

// Finite-series matrix calculus. Every series below is cut off by the
// nilpotency index of its argument, so all results are exact; arguments
// outside the nilpotent/unipotent class raise SpectrumError.

// e^{iQ} = sum_{n < m} (iQ)^n / n! for nilpotent Q of index m. Unipotent.
Matrix expI(const Matrix& q);

// ln A = -sum_{1 <= n < m} (I-A)^n / n for unipotent A, where m is the
// nilpotency index of I-A. Nilpotent; multiply by -i to recover Q from
// A = e^{iQ}.
Matrix logUnipotent(const Matrix& a);

// cos(kQ) = sum_{2j < m} (-1)^j k^{2j} Q^{2j} / (2j)! for nilpotent Q.
// Satisfies 2 cos(kQ) = e^{iQ}^k + e^{iQ}^{-k} exactly.
Matrix cosK(const Matrix& q, const ExactInteger& k);

} // namespace gh

#endif // GH_MATRIX_FUNCTIONS_HPP
