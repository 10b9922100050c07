#pragma once

#include "heisenring/hamiltonian.hpp"

#include <span>
#include <vector>

namespace heisenring {

/// Lower end of every threshold bracket; T = 0 itself is never evaluated.
inline constexpr double kThresholdBracketLow = 1e-6;
/// Target bracket width for U(T) = 0.
inline constexpr double kThresholdWidth = 1e-10;
/// Ground energies above -kZeroEnergyTolerance count as non-negative (N = 3).
inline constexpr double kZeroEnergyTolerance = 1e-10;

struct ThermalObservables {
    double temperature = 0.0;
    double log_z = 0.0;
    double u = 0.0;
    /// max(0, -u/N), nearest-neighbour concurrence.
    double c = 0.0;
};

struct ThresholdResult {
    int n = 0;
    /// 0 when the ground state carries no pairwise entanglement.
    double t_th = 0.0;
    double bracket_width = 0.0;
};

/// log(sum_i exp(x_i)), shifted by the maximum.
[[nodiscard]] double log_sum_exp(std::span<const double> x);

/// Normalised Boltzmann weights exp(-(E_i - E_min)/T) / Z'.
[[nodiscard]] std::vector<double> boltzmann_weights(std::span<const double> energies, double t);

[[nodiscard]] double log_partition_function(const FullSpectrum& spectrum, double t);
[[nodiscard]] double internal_energy(const FullSpectrum& spectrum, double t);
[[nodiscard]] double concurrence(const FullSpectrum& spectrum, double t);
[[nodiscard]] ThermalObservables thermal_observables(const FullSpectrum& spectrum, double t);

[[nodiscard]] double ground_state_concurrence(const FullSpectrum& spectrum);
[[nodiscard]] double ground_state_concurrence(int n);

/**
 * Temperature at which U(T) crosses zero, found by bisection on
 * [kThresholdBracketLow, T_hi] with T_hi doubled from 1 until U(T_hi) > 0.
 * Returns t_th = 0 for spectra whose ground energy is non-negative.
 */
[[nodiscard]] ThresholdResult threshold_temperature(const FullSpectrum& spectrum);
[[nodiscard]] ThresholdResult threshold_temperature(int n);

/// Bounds on T_th(infinity) from the largest odd and even rings computed.
struct ThermodynamicLimitEstimate {
    int n_odd = 0;
    int n_even = 0;
    double lower = 0.0;
    double upper = 0.0;
    double estimate = 0.0;
};

/// Needs at least one odd ring with a positive threshold and one even ring.
[[nodiscard]] ThermodynamicLimitEstimate estimate_thermodynamic_limit(std::span<const ThresholdResult> thresholds);

// Closed forms for the smallest rings, used as oracles.
//   Z(2) = e^{2b} + 3e^{-2b}
//   Z(3) = 4 + 4e^{-3b}
//   Z(4) = 3 + e^{2b} + 7e^{-2b} + 5e^{-4b}
[[nodiscard]] double analytic_partition_function(int n, double t);
//   C(2) = max(0, e^{2b} - 3e^{-2b}) / Z(2)
//   C(3) = 0
//   C(4) = max(0, e^{2b} - 7e^{-2b} - 10e^{-4b}) / (2 Z(4))
[[nodiscard]] double analytic_concurrence(int n, double t);

} // namespace heisenring
