#pragma once

#include "heisenring/eigensolver.hpp"
#include "heisenring/matrix.hpp"
#include "heisenring/spin_basis.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace heisenring {

/// Largest ring full_spectrum accepts (biggest block at N=14 is 3432x3432).
inline constexpr int kMaxQubits = 14;

/// Energies closer than this (relative to max(1, |E|)) share a degeneracy group.
inline constexpr double kDegeneracyTolerance = 1e-8;

/**
 * Ring Hamiltonian H = J * sum_i S_{i,i+1} (indices mod N) restricted to one
 * magnetization sector, where S is the two-qubit swap. Each bond contributes J
 * to the diagonal when its two bits agree and J between the two kets related by
 * exchanging its bits when they differ. For N = 2 both bonds (1,2) and (2,1)
 * act on the same pair, giving eigenvalues -2 and +2.
 */
struct SectorMatrix {
    Sector sector;
    Matrix entries;
    double j_coupling = 1.0;
};

[[nodiscard]] SectorMatrix build_sector_matrix(const Sector& sector);

/// Dense 2^n x 2^n Hamiltonian in the computational basis (n <= 12).
[[nodiscard]] Matrix full_hamiltonian(int n);

/// H|psi> on a full 2^n-component vector, without forming H.
[[nodiscard]] std::vector<double> apply_hamiltonian(int n, std::span<const double> psi);

struct SectorEigen {
    Sector sector;
    EigenDecomposition eig;
};

struct DegeneracyGroup {
    double energy = 0.0;
    std::size_t multiplicity = 0;
};

/// Every eigenvalue of the ring, assembled from its S_z blocks.
class FullSpectrum {
public:
    FullSpectrum(int n, std::vector<SectorEigen> sectors, bool has_vectors);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] bool has_vectors() const noexcept { return has_vectors_; }
    /// Ascending, length 2^n.
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    /// Indexed by n_up.
    [[nodiscard]] const std::vector<SectorEigen>& sectors() const noexcept { return sectors_; }
    [[nodiscard]] const SectorEigen& sector(int n_up) const { return sectors_.at(static_cast<std::size_t>(n_up)); }

    [[nodiscard]] double ground_energy() const noexcept { return values_.front(); }
    [[nodiscard]] double min_energy() const noexcept { return values_.front(); }

    [[nodiscard]] std::vector<DegeneracyGroup> degeneracy_groups(double tolerance = kDegeneracyTolerance) const;

    /// Sector eigenvector lifted into the full 2^n space.
    [[nodiscard]] std::vector<double> full_vector(int n_up, std::size_t index) const;

private:
    int n_;
    bool has_vectors_;
    std::vector<SectorEigen> sectors_;
    std::vector<double> values_;
};

/// Throws ArgumentError unless 2 <= n <= kMaxQubits.
[[nodiscard]] FullSpectrum full_spectrum(int n, bool with_vectors = false);

/// Places sector amplitudes into a zero 2^n vector.
[[nodiscard]] std::vector<double> embed(const Sector& sector, std::span<const double> sector_vector);

/// Groups an ascending value list into clusters.
[[nodiscard]] std::vector<DegeneracyGroup> group_degeneracies(std::span<const double> ascending,
                                                              double tolerance = kDegeneracyTolerance);

} // namespace heisenring
