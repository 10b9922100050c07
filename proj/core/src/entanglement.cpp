#include "heisenring/entanglement.hpp"

#include "heisenring/eigensolver.hpp"
#include "heisenring/errors.hpp"
#include "heisenring/thermodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace heisenring {
namespace {

void require_vectors(const FullSpectrum& spectrum, const char* where) {
    if (!spectrum.has_vectors())
        throw ArgumentError(std::string(where) + ": spectrum must be computed with eigenvectors");
}

void check_temperature(double t, const char* where) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw ArgumentError(std::string(where) + ": temperature must be positive and finite");
}

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

} // namespace

GroundSpace ground_space(const FullSpectrum& spectrum) {
    require_vectors(spectrum, "ground_space");
    GroundSpace g;
    g.n = spectrum.n();
    g.energy = spectrum.ground_energy();
    for (const auto& block : spectrum.sectors()) {
        for (std::size_t i = 0; i < block.eig.dim(); ++i) {
            if (block.eig.values[i] - g.energy > kGroundEnergyTolerance) break;
            g.basis.push_back(embed(block.sector, block.eig.vector(i)));
            g.sector_of.push_back(block.sector.n_up());
        }
    }
    return g;
}

GroundSpace ground_space(int n) { return ground_space(full_spectrum(n, true)); }

GhzSpec::GhzSpec(BasisState a, int sign) : a_(a), sign_(sign) {
    if (!a.valid()) throw ArgumentError("GhzSpec: invalid basis state");
    if (sign != 1 && sign != -1) throw ArgumentError("GhzSpec: sign must be +1 or -1");
}

GhzSpec GhzSpec::neel(int n, int sign) { return GhzSpec(neel_state(n), sign); }

double GhzSpec::overlap(std::span<const double> full_vector) const {
    if (full_vector.size() != (std::size_t{1} << n())) throw ArgumentError("GhzSpec::overlap: wrong vector length");
    return kInvSqrt2 * (full_vector[state_a().bits] + sign_ * full_vector[state_b().bits]);
}

std::string GhzSpec::to_string() const {
    return "|" + state_a().to_ket() + ">" + (sign_ > 0 ? "+" : "-") + "|" + state_b().to_ket() + ">";
}

double ghz_fidelity_ground(const GroundSpace& ground, const GhzSpec& ghz) {
    if (ghz.n() != ground.n) throw ArgumentError("ghz_fidelity_ground: GHZ qubit count does not match");
    if (ground.basis.empty()) throw ArgumentError("ghz_fidelity_ground: empty ground space");
    double f = 0.0;
    for (const auto& v : ground.basis) {
        const double o = ghz.overlap(v);
        f += o * o;
    }
    return f / static_cast<double>(ground.degeneracy());
}

GhzChoice best_neel_ghz(const GroundSpace& ground) {
    const GhzSpec plus = GhzSpec::neel(ground.n, +1);
    const GhzSpec minus = GhzSpec::neel(ground.n, -1);
    const double fp = ghz_fidelity_ground(ground, plus);
    const double fm = ghz_fidelity_ground(ground, minus);
    if (fm > fp + 1e-12) return {minus, fm};
    return {plus, fp};
}

GhzSearchResult exhaustive_ghz_search(const GroundSpace& ground) {
    GhzSearchResult out{best_neel_ghz(ground), best_neel_ghz(ground), false};
    const int n = ground.n;
    // Pairs {a, a-bar}: fix the top qubit of a to 0 to visit each pair once.
    const std::uint32_t pairs = std::uint32_t{1} << (n - 1);
    for (std::uint32_t bits = 0; bits < pairs; ++bits) {
        for (int sign : {+1, -1}) {
            const GhzSpec ghz(BasisState{bits, n}, sign);
            const double f = ghz_fidelity_ground(ground, ghz);
            if (f > out.best.fidelity + 1e-12) out.best = {ghz, f};
        }
    }
    out.beats_neel = out.best.fidelity > out.neel.fidelity + 1e-12;
    return out;
}

double thermal_ghz_fidelity(const FullSpectrum& spectrum, const GhzSpec& ghz, double t) {
    require_vectors(spectrum, "thermal_ghz_fidelity");
    check_temperature(t, "thermal_ghz_fidelity");
    if (ghz.n() != spectrum.n()) throw ArgumentError("thermal_ghz_fidelity: GHZ qubit count does not match");

    const double e_min = spectrum.min_energy();
    double z = 0.0;
    for (double e : spectrum.values()) z += std::exp(-(e - e_min) / t);

    const BasisState a = ghz.state_a();
    const BasisState b = ghz.state_b();
    const int up_a = a.popcount();
    const int up_b = b.popcount();

    std::vector<int> sectors{up_a};
    if (up_b != up_a) sectors.push_back(up_b);

    double f = 0.0;
    for (int n_up : sectors) {
        const auto& block = spectrum.sector(n_up);
        const auto& sector = block.sector;
        const bool has_a = sector.contains(a);
        const bool has_b = sector.contains(b);
        const std::size_t ia = has_a ? sector.index_of(a) : 0;
        const std::size_t ib = has_b ? sector.index_of(b) : 0;
        for (std::size_t j = 0; j < block.eig.dim(); ++j) {
            const auto v = block.eig.vector(j);
            const double amp = kInvSqrt2 * ((has_a ? v[ia] : 0.0) + ghz.sign() * (has_b ? v[ib] : 0.0));
            f += std::exp(-(block.eig.values[j] - e_min) / t) * amp * amp;
        }
    }
    return f / z;
}

std::optional<double> fidelity_threshold(const FullSpectrum& spectrum, const GhzSpec& ghz) {
    constexpr double t_start = 1e-3;
    constexpr int max_doublings = 64;
    auto excess = [&](double t) { return thermal_ghz_fidelity(spectrum, ghz, t) - kGhzCertificationLevel; };

    double lo = t_start;
    if (excess(lo) <= 0.0) return std::nullopt;
    double hi = 2.0 * lo;
    int doublings = 0;
    while (excess(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > max_doublings)
            throw InternalError("fidelity_threshold: F(T) stays above 1/2 for every bracket tried");
    }
    while (hi - lo > kFidelityThresholdWidth) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

Matrix thermal_density_matrix(const FullSpectrum& spectrum, double t) {
    require_vectors(spectrum, "thermal_density_matrix");
    check_temperature(t, "thermal_density_matrix");
    const int n = spectrum.n();
    if (n > kMaxOracleQubits)
        throw ArgumentError("thermal_density_matrix: n must be <= " + std::to_string(kMaxOracleQubits));

    const std::size_t dim = std::size_t{1} << n;
    const double e_min = spectrum.min_energy();
    double z = 0.0;
    for (double e : spectrum.values()) z += std::exp(-(e - e_min) / t);

    Matrix rho(dim, dim);
    for (const auto& block : spectrum.sectors()) {
        const auto& states = block.sector.states();
        for (std::size_t j = 0; j < block.eig.dim(); ++j) {
            const double w = std::exp(-(block.eig.values[j] - e_min) / t) / z;
            const auto v = block.eig.vector(j);
            for (std::size_t r = 0; r < states.size(); ++r) {
                const double wr = w * v[r];
                for (std::size_t c = 0; c < states.size(); ++c) rho(states[r].bits, states[c].bits) += wr * v[c];
            }
        }
    }
    return rho;
}

Matrix reduced_pair_density(const Matrix& rho, int n, int p, int q) {
    const std::size_t dim = std::size_t{1} << n;
    if (rho.rows() != dim || !rho.square()) throw ArgumentError("reduced_pair_density: density matrix must be 2^n square");
    if (p < 0 || q < 0 || p >= n || q >= n || p == q)
        throw ArgumentError("reduced_pair_density: need two distinct qubits in [0, n)");

    const std::size_t mp = std::size_t{1} << p;
    const std::size_t mq = std::size_t{1} << q;
    auto pair_index = [&](std::size_t s) { return 2 * ((s >> p) & 1u) + ((s >> q) & 1u); };
    auto with_pair = [&](std::size_t rest, std::size_t idx) {
        return rest | ((idx >> 1) & 1u ? mp : 0) | (idx & 1u ? mq : 0);
    };

    Matrix out(4, 4);
    for (std::size_t s = 0; s < dim; ++s) {
        const std::size_t rest = s & ~(mp | mq);
        const std::size_t row = pair_index(s);
        for (std::size_t col = 0; col < 4; ++col) out(row, col) += rho(s, with_pair(rest, col));
    }
    return out;
}

double two_qubit_concurrence(const Matrix& rho_pair) {
    if (rho_pair.rows() != 4 || !rho_pair.square()) throw ArgumentError("two_qubit_concurrence: need a 4x4 matrix");

    // sigma_y (x) sigma_y is real and anti-diagonal.
    Matrix flip(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    // R = sqrt(rho) rho~ sqrt(rho) is symmetric PSD and shares the spectrum of rho rho~.
    const auto dec = eigh(rho_pair, true);
    Matrix sqrt_rho(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const double s = std::sqrt(std::max(0.0, dec.values[k]));
        const auto v = dec.vector(k);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) sqrt_rho(i, j) += s * v[i] * v[j];
    }
    const Matrix rho_tilde = flip * rho_pair * flip;
    Matrix r = sqrt_rho * rho_tilde * sqrt_rho;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) r(i, j) = r(j, i) = 0.5 * (r(i, j) + r(j, i));

    auto mu = eigh(r, false).values;
    std::vector<double> lambda(4);
    for (std::size_t i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, mu[i]));
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double wootters_concurrence_oracle(const FullSpectrum& spectrum, double t, int first) {
    const int n = spectrum.n();
    if (n > kMaxOracleQubits)
        throw ArgumentError("wootters_concurrence_oracle: n must be <= " + std::to_string(kMaxOracleQubits));
    const Matrix rho = thermal_density_matrix(spectrum, t);
    const int p = ((first % n) + n) % n;
    return two_qubit_concurrence(reduced_pair_density(rho, n, p, (p + 1) % n));
}

} // namespace heisenring
