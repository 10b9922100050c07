#include "cli/verify.hpp"

#include <heisenring/eigensolver.hpp>
#include <heisenring/entanglement.hpp>
#include <heisenring/four_qubit_analytic.hpp>
#include <heisenring/hamiltonian.hpp>
#include <heisenring/thermodynamics.hpp>

#include "cli/options.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace heisenring::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult make(std::string name, std::string description, double tolerance, double worst) {
    return {std::move(name), std::move(description), tolerance, worst, worst <= tolerance};
}

struct Profile {
    double energy;
    std::size_t multiplicity;
};

double profile_defect(const FullSpectrum& s, const std::vector<Profile>& expected) {
    const auto groups = s.degeneracy_groups();
    if (groups.size() != expected.size()) return kInf;
    double worst = 0.0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].multiplicity != expected[i].multiplicity) return kInf;
        worst = std::max(worst, std::abs(groups[i].energy - expected[i].energy));
    }
    return worst;
}

std::vector<double> log_temperatures(double lo, double hi, int steps) { return log_grid({lo, hi, steps}); }

std::vector<double> linear_temperatures(double lo, double hi, int steps) {
    std::vector<double> t;
    for (int i = 0; i < steps; ++i) t.push_back(lo + (hi - lo) * i / (steps - 1));
    return t;
}

Matrix random_symmetric(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) a(i, j) = a(j, i) = u(rng);
    return a;
}

} // namespace

bool VerificationSummary::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationSummary run_verification() {
    VerificationSummary out;
    auto& checks = out.checks;

    std::map<int, FullSpectrum> spectra;
    for (int n = 2; n <= 11; ++n) spectra.emplace(n, full_spectrum(n, true));
    const auto& s4 = spectra.at(4);

    // Small-ring spectra against the listed levels and degeneracies.
    {
        double worst = 0.0;
        worst = std::max(worst, profile_defect(spectra.at(2), {{-2, 1}, {2, 3}}));
        worst = std::max(worst, profile_defect(spectra.at(3), {{0, 4}, {3, 4}}));
        worst = std::max(worst, profile_defect(s4, {{-2, 1}, {0, 3}, {2, 7}, {4, 5}}));
        checks.push_back(make("small_ring_spectra", "N=2,3,4 levels/degeneracies vs closed-form lists", 1e-10, worst));
    }

    // Closed-form Z and C for N = 2, 3, 4.
    {
        double worst_z = 0.0;
        double worst_c = 0.0;
        for (int n : {2, 3, 4}) {
            for (double t : log_temperatures(0.05, 50.0, 50)) {
                const double z_num = std::exp(log_partition_function(spectra.at(n), t));
                const double z_ref = analytic_partition_function(n, t);
                worst_z = std::max(worst_z, std::abs(z_num - z_ref) / z_ref);
                worst_c = std::max(worst_c, std::abs(concurrence(spectra.at(n), t) - analytic_concurrence(n, t)));
            }
        }
        checks.push_back(make("closed_form_partition_function", "relative |Z - Z_closed| for N=2,3,4, 50 T in [0.05, 50]",
                              1e-12, worst_z));
        checks.push_back(
            make("closed_form_concurrence", "|C - C_closed| for N=2,3,4, 50 T in [0.05, 50]", 1e-12, worst_c));
    }

    // -U/N against (1/N) d ln Z / d beta by central differences.
    {
        double worst = 0.0;
        for (int n = 2; n <= 11; ++n) {
            for (double t : {0.3, 0.7, 1.0, 1.6, 3.0}) {
                const double beta = 1.0 / t;
                const double h = 1e-5;
                const double dlnz = (log_partition_function(spectra.at(n), 1.0 / (beta + h)) -
                                     log_partition_function(spectra.at(n), 1.0 / (beta - h))) /
                                    (2 * h);
                worst = std::max(worst, std::abs(-internal_energy(spectra.at(n), t) / n - dlnz / n));
            }
        }
        checks.push_back(make("energy_derivative_form", "-U/N vs (1/NZ) dZ/dbeta, N=2..11", 1e-6, worst));
    }

    // Reduced-density-matrix concurrence against C = max(0, -U/N).
    {
        double worst = 0.0;
        for (int n : {2, 4, 5, 6, 7, 8}) {
            for (double t : linear_temperatures(0.1, 5.0, 10)) {
                worst = std::max(worst, std::abs(wootters_concurrence_oracle(spectra.at(n), t) -
                                                 concurrence(spectra.at(n), t)));
            }
        }
        checks.push_back(make("wootters_vs_energy", "Wootters RDM concurrence vs -U/N, N in {2,4,5,6,7,8}, 10 T in [0.1, 5]",
                              1e-8, worst));

        double worst_tr = 0.0;
        for (int n : {5, 6}) {
            const double c0 = wootters_concurrence_oracle(spectra.at(n), 0.8, 0);
            for (int i = 1; i < n; ++i)
                worst_tr = std::max(worst_tr, std::abs(wootters_concurrence_oracle(spectra.at(n), 0.8, i) - c0));
        }
        checks.push_back(make("wootters_translation", "oracle identical for every adjacent pair, N=5,6", 1e-9, worst_tr));
    }

    // Closed-form four-qubit eigensystem.
    {
        const auto report = four_qubit::verify_against_numeric(s4);
        checks.push_back(make("four_qubit_residuals", "||H psi - E psi|| for all 16 closed-form states",
                              four_qubit::kResidualTolerance, report.max_residual()));
        checks.push_back(make("four_qubit_span", "closed-form states lie in numeric eigenspaces", four_qubit::kSpanTolerance,
                              report.max_span_defect()));
        checks.push_back(make("four_qubit_orthonormality", "Gram matrix of closed-form states = I",
                              four_qubit::kCompletenessTolerance, report.orthonormality_defect));
        checks.push_back(make("four_qubit_completeness", "sum of closed-form projectors = I",
                              four_qubit::kCompletenessTolerance, report.completeness_defect));
        checks.push_back(make("four_qubit_ground_overlap", "1 - |<Psi_9|numeric ground>|", four_qubit::kSpanTolerance,
                              1.0 - report.ground_overlap));
    }

    // Thermal GHZ fidelity for N = 4 against its closed form.
    {
        const GhzSpec ghz = GhzSpec::neel(4, +1);
        double worst = 0.0;
        double worst_den = 0.0;
        for (double t : log_temperatures(0.05, 20.0, 20)) {
            worst = std::max(worst, std::abs(thermal_ghz_fidelity(s4, ghz, t) - four_qubit::analytic_thermal_fidelity(t)));
            const double b = 1.0 / t;
            const double den = 3 + std::exp(2 * b) + 7 * std::exp(-2 * b) + 5 * std::exp(-4 * b);
            const double z = analytic_partition_function(4, t);
            worst_den = std::max(worst_den, std::abs(den - std::exp(log_partition_function(s4, t))) / z);
        }
        checks.push_back(make("four_qubit_thermal_fidelity", "numeric F(T) vs closed form, 20 T in [0.05, 20]", 1e-10, worst));
        checks.push_back(
            make("four_qubit_fidelity_denominator", "closed-form F denominator vs numeric Z(4)", 1e-12, worst_den));
    }

    // Eigensolver on random symmetric matrices.
    {
        std::mt19937_64 rng(20260414);
        double worst_rec = 0.0;
        double worst_orth = 0.0;
        for (std::size_t dim : {1u, 2u, 3u, 7u, 20u, 64u, 200u, 462u}) {
            const Matrix a = random_symmetric(dim, rng);
            const auto dec = eigh(a, true);
            const Matrix& v = *dec.vectors;
            Matrix rec(dim, dim);
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t i = 0; i < dim; ++i) {
                    const double s = dec.values[k] * v(k, i);
                    for (std::size_t j = 0; j < dim; ++j) rec(i, j) += s * v(k, j);
                }
            worst_rec = std::max(worst_rec, (rec - a).max_abs() / std::max(1.0, a.max_abs()));
            const Matrix gram = v * v.transposed();
            worst_orth = std::max(worst_orth, (gram - Matrix::identity(dim)).max_abs());
        }
        checks.push_back(make("eigensolver_reconstruction", "||V L V^T - A||_max on random symmetric, dim <= 462", 1e-9,
                              worst_rec));
        checks.push_back(make("eigensolver_orthonormality", "||V V^T - I||_max on random symmetric, dim <= 462", 1e-10,
                              worst_orth));
    }

    // Trace identity, monotone U, ground degeneracy, limits, flip symmetry.
    {
        double worst_trace = 0.0;
        double worst_mono = 0.0;
        double worst_deg = 0.0;
        double worst_low = 0.0;
        double worst_high = 0.0;
        double worst_flip = 0.0;
        const auto grid = log_temperatures(0.01, 100.0, 200);
        for (int n = 2; n <= 11; ++n) {
            const auto& s = spectra.at(n);
            double trace = 0.0;
            for (double e : s.values()) trace += e;
            const double expected = n * std::ldexp(1.0, n - 1);
            worst_trace = std::max(worst_trace, std::abs(trace - expected) / expected);

            double prev = -kInf;
            for (double t : grid) {
                const double u = internal_energy(s, t);
                worst_mono = std::max(worst_mono, prev - u);
                prev = u;
            }

            const std::size_t want = n % 2 == 0 ? 1 : 4;
            worst_deg = std::max(worst_deg, std::abs(static_cast<double>(s.degeneracy_groups().front().multiplicity) -
                                                     static_cast<double>(want)));

            worst_low = std::max(worst_low, std::abs(internal_energy(s, 1e-4) - s.ground_energy()));
            worst_high = std::max(worst_high, std::abs(internal_energy(s, 1e6) - n / 2.0));

            for (int up = 0; up <= n; ++up) {
                const auto& a = s.sector(up).eig.values;
                const auto& b = s.sector(n - up).eig.values;
                for (std::size_t i = 0; i < a.size(); ++i) worst_flip = std::max(worst_flip, std::abs(a[i] - b[i]));
            }
        }
        checks.push_back(make("trace_identity", "relative |sum E - N 2^(N-1)|, N=2..11", 1e-12, worst_trace));
        checks.push_back(make("energy_monotone", "max decrease of U over an ascending T grid, N=2..11", 1e-12, worst_mono));
        checks.push_back(make("ground_degeneracy", "ground multiplicity 1 (even N) / 4 (odd N), N=2..11", 0.0, worst_deg));
        checks.push_back(make("low_temperature_limit", "|U(1e-4) - E_GS|, N=2..11", 1e-6, worst_low));
        checks.push_back(make("high_temperature_limit", "|U(1e6) - N/2|, N=2..11", 1e-3, worst_high));
        checks.push_back(make("flip_symmetry", "sector n_up vs N - n_up eigenvalues, N=2..11", 1e-9, worst_flip));
    }

    // Cyclic shift maps nondegenerate eigenvectors to eigenvectors.
    {
        double worst = 0.0;
        for (int n : {6, 7, 8}) {
            const auto& s = spectra.at(n);
            const auto& block = s.sector(n / 2);
            const auto groups = group_degeneracies(block.eig.values);
            std::size_t offset = 0;
            for (const auto& g : groups) {
                if (g.multiplicity == 1) {
                    const auto v = s.full_vector(n / 2, offset);
                    std::vector<double> shifted(v.size(), 0.0);
                    for (std::uint32_t b = 0; b < v.size(); ++b) shifted[cyclic_shift({b, n}).bits] = v[b];
                    const auto hv = apply_hamiltonian(n, shifted);
                    double r = 0.0;
                    for (std::size_t i = 0; i < v.size(); ++i) r += std::pow(hv[i] - g.energy * shifted[i], 2);
                    worst = std::max(worst, std::sqrt(r));
                }
                offset += g.multiplicity;
            }
        }
        checks.push_back(make("translation_eigenvectors", "shifted nondegenerate eigenvectors stay eigenvectors, N=6,7,8",
                              1e-8, worst));
    }

    return out;
}

} // namespace heisenring::cli
