#pragma once

#include "heisenring/hamiltonian.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace heisenring::four_qubit {

inline constexpr int kQubits = 4;
inline constexpr std::size_t kDim = 16;

using Amplitudes = std::array<std::complex<double>, kDim>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kSpanTolerance = 1e-9;
inline constexpr double kCompletenessTolerance = 1e-10;

struct AnalyticEigenpair {
    int label = 0;
    double energy = 0.0;
    /// Indexed by the bitmask of spin_basis (qubit 1 in bit 0).
    Amplitudes amplitudes{};
    std::string formula;
};

/**
 * The sixteen closed-form eigenpairs of the N = 4 ring.
 *
 * |n>_0 = T^{n-1}|1000>, t_k = exp(i pi k / 2):
 *   Psi_0 = |0000>, Psi_15 = |1111>                   E = 4
 *   Psi_k = 1/2 sum_n t_k^{-n} |n>_0         (k=1..4) E = 2 + t_k + 1/t_k
 *   Psi_{k+4} = Lambda_x Psi_k                        same E
 *   Psi_9 .. Psi_14 in the S_z = 0 block              E = -2, 0, 2, 2, 2, 4
 */
[[nodiscard]] std::array<AnalyticEigenpair, kDim> analytic_eigensystem();

struct EigenpairCheck {
    int label = 0;
    double energy = 0.0;
    double norm_defect = 0.0;
    /// ||H psi - E psi||_2 against the dense 16x16 H.
    double residual = 0.0;
    /// ||psi - P psi||_2, P the numeric eigenprojector of the same energy.
    double span_defect = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::vector<EigenpairCheck> pairs;
    /// max |sum_j |psi_j><psi_j| - I|.
    double completeness_defect = 0.0;
    /// max |<psi_i|psi_j> - delta_ij|.
    double orthonormality_defect = 0.0;
    /// |<Psi_9|numeric ground state>|.
    double ground_overlap = 0.0;

    [[nodiscard]] double max_residual() const;
    [[nodiscard]] double max_span_defect() const;
    [[nodiscard]] std::vector<int> failing_labels() const;
    [[nodiscard]] bool passed() const;
};

/// Cross-checks the analytic states against a numeric N = 4 spectrum with eigenvectors.
[[nodiscard]] VerificationReport verify_against_numeric(const FullSpectrum& spectrum);

/// F(T) = (e^{-4b}/3 + 2e^{2b}/3) / (3 + e^{2b} + 7e^{-2b} + 5e^{-4b}) for the GHZ pair |1010>, |0101>.
[[nodiscard]] double analytic_thermal_fidelity(double t);

} // namespace heisenring::four_qubit
