#include "heisenring/thermodynamics.hpp"

#include "heisenring/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace heisenring {
namespace {

void check_temperature(double t, const char* where) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw ArgumentError(std::string(where) + ": temperature must be positive and finite, got " +
                            std::to_string(t));
}

void check_analytic_n(int n, const char* where) {
    if (n < 2 || n > 4)
        throw ArgumentError(std::string(where) + ": closed form only exists for n = 2, 3, 4, got " +
                            std::to_string(n));
}

constexpr int kMaxBracketDoublings = 64;

} // namespace

double log_sum_exp(std::span<const double> x) {
    if (x.empty()) return -std::numeric_limits<double>::infinity();
    const double m = *std::max_element(x.begin(), x.end());
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double v : x) s += std::exp(v - m);
    return m + std::log(s);
}

std::vector<double> boltzmann_weights(std::span<const double> energies, double t) {
    check_temperature(t, "boltzmann_weights");
    if (energies.empty()) throw ArgumentError("boltzmann_weights: empty spectrum");
    const double e_min = *std::min_element(energies.begin(), energies.end());
    std::vector<double> w(energies.size());
    double z = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        w[i] = std::exp(-(energies[i] - e_min) / t);
        z += w[i];
    }
    for (double& x : w) x /= z;
    return w;
}

double log_partition_function(const FullSpectrum& spectrum, double t) {
    check_temperature(t, "log_partition_function");
    const auto& e = spectrum.values();
    const double e_min = spectrum.min_energy();
    double z = 0.0;
    for (double ei : e) z += std::exp(-(ei - e_min) / t);
    return -e_min / t + std::log(z);
}

double internal_energy(const FullSpectrum& spectrum, double t) {
    check_temperature(t, "internal_energy");
    const double e_min = spectrum.min_energy();
    double z = 0.0;
    double excess = 0.0;
    for (double ei : spectrum.values()) {
        const double w = std::exp(-(ei - e_min) / t);
        z += w;
        excess += (ei - e_min) * w;
    }
    return e_min + excess / z;
}

namespace {
double concurrence_from_energy(double u, int n) { return std::min(1.0, std::max(0.0, -u / n)); }
} // namespace

double concurrence(const FullSpectrum& spectrum, double t) {
    return concurrence_from_energy(internal_energy(spectrum, t), spectrum.n());
}

ThermalObservables thermal_observables(const FullSpectrum& spectrum, double t) {
    ThermalObservables obs;
    obs.temperature = t;
    obs.log_z = log_partition_function(spectrum, t);
    obs.u = internal_energy(spectrum, t);
    obs.c = concurrence_from_energy(obs.u, spectrum.n());
    return obs;
}

double ground_state_concurrence(const FullSpectrum& spectrum) {
    return concurrence_from_energy(spectrum.ground_energy(), spectrum.n());
}

double ground_state_concurrence(int n) { return ground_state_concurrence(full_spectrum(n, false)); }

ThresholdResult threshold_temperature(const FullSpectrum& spectrum) {
    ThresholdResult out{spectrum.n(), 0.0, 0.0};
    if (spectrum.ground_energy() >= -kZeroEnergyTolerance) return out;

    double lo = kThresholdBracketLow;
    double hi = 1.0;
    int doublings = 0;
    while (internal_energy(spectrum, hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > kMaxBracketDoublings)
            throw InternalError("threshold_temperature: could not bracket U(T) = 0 for n = " +
                                std::to_string(spectrum.n()));
    }
    if (internal_energy(spectrum, lo) > 0.0)
        throw InternalError("threshold_temperature: U is already positive at the lower bracket end");

    while (hi - lo > kThresholdWidth) {
        const double mid = 0.5 * (lo + hi);
        if (internal_energy(spectrum, mid) > 0.0) hi = mid;
        else lo = mid;
    }
    out.t_th = 0.5 * (lo + hi);
    out.bracket_width = hi - lo;
    return out;
}

ThresholdResult threshold_temperature(int n) { return threshold_temperature(full_spectrum(n, false)); }

ThermodynamicLimitEstimate estimate_thermodynamic_limit(std::span<const ThresholdResult> thresholds) {
    const ThresholdResult* odd = nullptr;
    const ThresholdResult* even = nullptr;
    for (const auto& r : thresholds) {
        if (r.n % 2 == 1 && r.t_th > 0.0 && (!odd || r.n > odd->n)) odd = &r;
        if (r.n % 2 == 0 && (!even || r.n > even->n)) even = &r;
    }
    if (!odd || !even)
        throw ArgumentError("estimate_thermodynamic_limit: need an odd ring with T_th > 0 and an even ring");
    ThermodynamicLimitEstimate est;
    est.n_odd = odd->n;
    est.n_even = even->n;
    est.lower = odd->t_th;
    est.upper = even->t_th;
    est.estimate = 0.5 * (est.lower + est.upper);
    return est;
}

double analytic_partition_function(int n, double t) {
    check_analytic_n(n, "analytic_partition_function");
    check_temperature(t, "analytic_partition_function");
    const double b = 1.0 / t;
    switch (n) {
    case 2: return std::exp(2 * b) + 3 * std::exp(-2 * b);
    case 3: return 4 + 4 * std::exp(-3 * b);
    default: return 3 + std::exp(2 * b) + 7 * std::exp(-2 * b) + 5 * std::exp(-4 * b);
    }
}

double analytic_concurrence(int n, double t) {
    check_analytic_n(n, "analytic_concurrence");
    check_temperature(t, "analytic_concurrence");
    const double b = 1.0 / t;
    // Numerator and Z both divided by e^{2b} so small T cannot overflow.
    switch (n) {
    case 2: return std::max(0.0, 1 - 3 * std::exp(-4 * b)) / (1 + 3 * std::exp(-4 * b));
    case 3: return 0.0;
    default: {
        const double z = 3 * std::exp(-2 * b) + 1 + 7 * std::exp(-4 * b) + 5 * std::exp(-6 * b);
        return std::max(0.0, 1 - 7 * std::exp(-4 * b) - 10 * std::exp(-6 * b)) / (2 * z);
    }
    }
}

} // namespace heisenring
