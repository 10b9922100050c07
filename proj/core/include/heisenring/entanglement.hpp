#pragma once

#include "heisenring/hamiltonian.hpp"
#include "heisenring/matrix.hpp"
#include "heisenring/spin_basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisenring {

/// Eigenvalues within this of E_min belong to the ground space.
inline constexpr double kGroundEnergyTolerance = 1e-8;
/// Largest ring for which the dense thermal density matrix is formed.
inline constexpr int kMaxOracleQubits = 8;
inline constexpr double kFidelityThresholdWidth = 1e-8;
/// F > 1/2 certifies genuine N-particle entanglement.
inline constexpr double kGhzCertificationLevel = 0.5;

struct GroundSpace {
    int n = 0;
    double energy = 0.0;
    /// Orthonormal ground vectors in the full 2^n space.
    std::vector<std::vector<double>> basis;
    /// n_up of the sector each basis vector came from.
    std::vector<int> sector_of;

    [[nodiscard]] std::size_t degeneracy() const noexcept { return basis.size(); }
};

/// Collects every eigenvector within kGroundEnergyTolerance of the minimum.
[[nodiscard]] GroundSpace ground_space(const FullSpectrum& spectrum);
[[nodiscard]] GroundSpace ground_space(int n);

/// (|a> + sign |a-bar>)/sqrt(2) where a-bar is the bitwise complement of a.
class GhzSpec {
public:
    GhzSpec(BasisState a, int sign);

    static GhzSpec neel(int n, int sign);

    [[nodiscard]] int n() const noexcept { return a_.n; }
    [[nodiscard]] BasisState state_a() const noexcept { return a_; }
    [[nodiscard]] BasisState state_b() const noexcept { return global_flip(a_); }
    [[nodiscard]] int sign() const noexcept { return sign_; }

    /// <GHZ|v> for a real full-space vector.
    [[nodiscard]] double overlap(std::span<const double> full_vector) const;

    /// e.g. "|0101>+|1010>".
    [[nodiscard]] std::string to_string() const;

    bool operator==(const GhzSpec&) const = default;

private:
    BasisState a_;
    int sign_;
};

/// <GHZ|P|GHZ>/d: fidelity against the uniform mixture over the ground space.
[[nodiscard]] double ghz_fidelity_ground(const GroundSpace& ground, const GhzSpec& ghz);

struct GhzChoice {
    GhzSpec ghz;
    double fidelity;
};

/// Neel pair with whichever sign gives the larger fidelity; ties go to +1.
[[nodiscard]] GhzChoice best_neel_ghz(const GroundSpace& ground);

struct GhzSearchResult {
    GhzChoice best;
    GhzChoice neel;
    /// True if some complementary pair beats the best Neel choice by more than 1e-12.
    bool beats_neel = false;
};

/// Every complementary pair (2^{N-1}) times both signs.
[[nodiscard]] GhzSearchResult exhaustive_ghz_search(const GroundSpace& ground);

/// sum_j w_j |<GHZ|psi_j>|^2 over the thermal eigenbasis. Needs eigenvectors.
[[nodiscard]] double thermal_ghz_fidelity(const FullSpectrum& spectrum, const GhzSpec& ghz, double t);

/**
 * Temperature below which F(T) > 1/2, located by doubling a bracket upward
 * from a low temperature and bisecting to kFidelityThresholdWidth. Empty when
 * F never exceeds 1/2 (no certified region).
 */
[[nodiscard]] std::optional<double> fidelity_threshold(const FullSpectrum& spectrum, const GhzSpec& ghz);

/// Dense exp(-H/T)/Z over all 2^n states (n <= kMaxOracleQubits).
[[nodiscard]] Matrix thermal_density_matrix(const FullSpectrum& spectrum, double t);

/// Partial trace onto qubits (p, q); row index = 2*m_p + m_q. p, q are zero-based.
[[nodiscard]] Matrix reduced_pair_density(const Matrix& rho, int n, int p, int q);

/// Wootters concurrence of a real two-qubit density matrix.
[[nodiscard]] double two_qubit_concurrence(const Matrix& rho_pair);

/// Concurrence of qubits (first, first+1 mod N) from the reduced thermal state.
[[nodiscard]] double wootters_concurrence_oracle(const FullSpectrum& spectrum, double t, int first = 0);

} // namespace heisenring
