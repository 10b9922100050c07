#pragma once

#include "heisenring/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace heisenring {

/// Maximum implicit-QL iterations spent on any single eigenvalue.
inline constexpr int kMaxQlIterationsPerEigenvalue = 64;

/// Largest |a_ij - a_ji| accepted as symmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Row i is the unit eigenvector for values[i]. Empty unless requested.
    std::optional<Matrix> vectors;

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }
    [[nodiscard]] std::span<const double> vector(std::size_t i) const { return vectors->row(i); }
};

/**
 * Symmetric eigendecomposition by Householder tridiagonalization followed by
 * implicit-shift QL iteration.
 *
 * Output is a deterministic function of the input: sweeps run in a fixed order
 * and each eigenvector is signed so its largest-magnitude component (first one
 * on ties) is positive. Vectors inside a degenerate cluster are orthonormal but
 * otherwise arbitrary.
 *
 * Throws ArgumentError for non-square or non-symmetric input and
 * ConvergenceError when an eigenvalue needs more than
 * kMaxQlIterationsPerEigenvalue iterations.
 */
[[nodiscard]] EigenDecomposition eigh(const Matrix& a, bool want_vectors = true);

} // namespace heisenring
