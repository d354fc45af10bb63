#ifndef GH_TEST_SUPPORT_HPP
#define GH_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "gh/matrix.hpp"

namespace ghtest {

inline gh::GaussianRational q(long num, long den = 1) {
    return gh::GaussianRational(gh::makeRational(num, den));
}

inline gh::GaussianRational gi(long re, long im) {
    return {gh::ExactRational(re), gh::ExactRational(im)};
}

inline gh::Matrix intMatrix(const std::vector<std::vector<long>>& rows) {
    gh::Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            m(i, j) = q(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

inline gh::Vector intVector(const std::vector<long>& entries) {
    gh::Vector v(static_cast<int>(entries.size()));
    for (int i = 0; i < v.dim(); ++i) {
        v[i] = q(entries[static_cast<std::size_t>(i)]);
    }
    return v;
}

// Dense Gaussian-integer matrix with small entries, for algebraic property
// tests that need arbitrary (not unipotent) inputs.
inline gh::Matrix denseSeededMatrix(std::uint64_t seed, int n) {
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&state]() {
        state ^= state >> 33;
        state *= 0xff51afd7ed558ccdULL;
        state ^= state >> 33;
        return state;
    };
    gh::Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long re = static_cast<long>(next() % 5) - 2;
            const long im = static_cast<long>(next() % 3) - 1;
            m(i, j) = gi(re, im);
        }
    }
    return m;
}

} // namespace ghtest

#endif // GH_TEST_SUPPORT_HPP
