#include "heisenring/hamiltonian.hpp"

#include "heisenring/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace heisenring {
namespace {

constexpr double kJ = 1.0;

void check_ring_size(int n, int max, const char* where) {
    if (n < 2 || n > max)
        throw ArgumentError(std::string(where) + ": qubit count must be in [2, " + std::to_string(max) + "], got " +
                            std::to_string(n));
}

} // namespace

SectorMatrix build_sector_matrix(const Sector& sector) {
    const int n = sector.n();
    SectorMatrix out{sector, Matrix(sector.size(), sector.size()), kJ};
    for (std::size_t col = 0; col < sector.size(); ++col) {
        const std::uint32_t s = sector[col].bits;
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            const std::uint32_t bi = (s >> i) & 1u;
            const std::uint32_t bj = (s >> j) & 1u;
            if (bi == bj) {
                out.entries(col, col) += kJ;
            } else {
                const BasisState swapped{s ^ ((1u << i) | (1u << j)), n};
                out.entries(sector.index_of(swapped), col) += kJ;
            }
        }
    }
    return out;
}

Matrix full_hamiltonian(int n) {
    check_ring_size(n, 12, "full_hamiltonian");
    const std::size_t dim = std::size_t{1} << n;
    Matrix h(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            if (((s >> i) & 1u) == ((s >> j) & 1u)) h(s, s) += kJ;
            else h(s ^ ((std::size_t{1} << i) | (std::size_t{1} << j)), s) += kJ;
        }
    }
    return h;
}

std::vector<double> apply_hamiltonian(int n, std::span<const double> psi) {
    check_ring_size(n, kMaxBasisQubits, "apply_hamiltonian");
    const std::size_t dim = std::size_t{1} << n;
    if (psi.size() != dim) throw ArgumentError("apply_hamiltonian: vector length must be 2^n");
    std::vector<double> out(dim, 0.0);
    for (std::size_t s = 0; s < dim; ++s) {
        const double amp = psi[s];
        if (amp == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            if (((s >> i) & 1u) == ((s >> j) & 1u)) out[s] += kJ * amp;
            else out[s ^ ((std::size_t{1} << i) | (std::size_t{1} << j))] += kJ * amp;
        }
    }
    return out;
}

std::vector<double> embed(const Sector& sector, std::span<const double> sector_vector) {
    if (sector_vector.size() != sector.size()) throw ArgumentError("embed: vector length must equal sector size");
    std::vector<double> out(std::size_t{1} << sector.n(), 0.0);
    for (std::size_t i = 0; i < sector.size(); ++i) out[sector[i].bits] = sector_vector[i];
    return out;
}

std::vector<DegeneracyGroup> group_degeneracies(std::span<const double> ascending, double tolerance) {
    std::vector<DegeneracyGroup> groups;
    std::size_t start = 0;
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        const double anchor = ascending[start];
        if (i > start && std::abs(ascending[i] - anchor) > tolerance * std::max(1.0, std::abs(anchor))) {
            groups.push_back({anchor, i - start});
            start = i;
        }
    }
    if (!ascending.empty()) groups.push_back({ascending[start], ascending.size() - start});
    return groups;
}

FullSpectrum::FullSpectrum(int n, std::vector<SectorEigen> sectors, bool has_vectors)
    : n_(n), has_vectors_(has_vectors), sectors_(std::move(sectors)) {
    values_.reserve(std::size_t{1} << n);
    for (const auto& block : sectors_) values_.insert(values_.end(), block.eig.values.begin(), block.eig.values.end());
    std::sort(values_.begin(), values_.end());
}

std::vector<DegeneracyGroup> FullSpectrum::degeneracy_groups(double tolerance) const {
    return group_degeneracies(values_, tolerance);
}

std::vector<double> FullSpectrum::full_vector(int n_up, std::size_t index) const {
    if (!has_vectors_) throw ArgumentError("full_vector: spectrum was computed without eigenvectors");
    const auto& block = sector(n_up);
    return embed(block.sector, block.eig.vector(index));
}

FullSpectrum full_spectrum(int n, bool with_vectors) {
    check_ring_size(n, kMaxQubits, "full_spectrum");
    std::vector<SectorEigen> blocks;
    blocks.reserve(static_cast<std::size_t>(n) + 1);
    for (int n_up = 0; n_up <= n; ++n_up) {
        auto matrix = build_sector_matrix(enumerate_sector(n, n_up));
        auto eig = eigh(matrix.entries, with_vectors);
        blocks.push_back({std::move(matrix.sector), std::move(eig)});
    }
    return FullSpectrum(n, std::move(blocks), with_vectors);
}

} // namespace heisenring
