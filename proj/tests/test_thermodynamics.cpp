#include <heisenring/errors.hpp>
#include <heisenring/thermodynamics.hpp>

#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace heisenring;

namespace {

const FullSpectrum& spectrum(int n) {
    static std::map<int, FullSpectrum> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, full_spectrum(n)).first;
    return it->second;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> t;
    for (int i = 0; i < n; ++i) t.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return t;
}

} // namespace

TEST(Thermodynamics, LogSumExpIsShifted) {
    const std::vector<double> x{1000.0, 1000.0};
    EXPECT_NEAR(log_sum_exp(x), 1000.0 + std::log(2.0), 1e-12);
    const std::vector<double> y{-1000.0, -1001.0};
    EXPECT_NEAR(log_sum_exp(y), -1000.0 + std::log1p(std::exp(-1.0)), 1e-12);
    EXPECT_TRUE(std::isinf(log_sum_exp(std::vector<double>{})));
}

TEST(Thermodynamics, BoltzmannWeightsNormalised) {
    const std::vector<double> e{-2.0, 2.0, 2.0, 2.0};
    const auto w = boltzmann_weights(e, 1e-4);
    EXPECT_DOUBLE_EQ(w[0], 1.0);
    EXPECT_EQ(w[1], 0.0);
    const auto w1 = boltzmann_weights(e, 1.0);
    EXPECT_NEAR(w1[0] + w1[1] + w1[2] + w1[3], 1.0, 1e-15);
    EXPECT_THROW((void)boltzmann_weights(e, 0.0), ArgumentError);
    EXPECT_THROW((void)boltzmann_weights(std::vector<double>{}, 1.0), ArgumentError);
}

TEST(Thermodynamics, PartitionFunctionExamples) {
    EXPECT_NEAR(std::exp(log_partition_function(spectrum(2), 2.0)), std::exp(1.0) + 3 * std::exp(-1.0), 1e-12);
    EXPECT_NEAR(std::exp(log_partition_function(spectrum(3), 1e8)), 8.0, 1e-6);
    const double z4 = 3 + std::exp(2.0) + 7 * std::exp(-2.0) + 5 * std::exp(-4.0);
    EXPECT_NEAR(std::exp(log_partition_function(spectrum(4), 1.0)) / z4, 1.0, 1e-12);
    EXPECT_TRUE(std::isfinite(log_partition_function(spectrum(11), 1e-4)));
    EXPECT_THROW((void)log_partition_function(spectrum(4), -1.0), ArgumentError);
    EXPECT_THROW((void)log_partition_function(spectrum(4), 0.0), ArgumentError);
}

TEST(Thermodynamics, AnalyticPartitionFunction) {
    EXPECT_DOUBLE_EQ(analytic_partition_function(3, 0.5), 4 + 4 * std::exp(-6.0));
    EXPECT_NEAR(analytic_partition_function(2, 1e9), 4.0, 1e-8);
    EXPECT_NEAR(analytic_partition_function(4, 1.0), std::exp(log_partition_function(spectrum(4), 1.0)),
                1e-12 * analytic_partition_function(4, 1.0));
    EXPECT_THROW((void)analytic_partition_function(5, 1.0), ArgumentError);
    EXPECT_THROW((void)analytic_partition_function(1, 1.0), ArgumentError);
    EXPECT_THROW((void)analytic_concurrence(5, 1.0), ArgumentError);
    EXPECT_THROW((void)analytic_partition_function(2, 0.0), ArgumentError);
}

TEST(Thermodynamics, InternalEnergyExamples) {
    for (double t : {0.1, 0.7, 3.0, 40.0}) {
        const double b = 1 / t;
        EXPECT_NEAR(internal_energy(spectrum(3), t), 12 * std::exp(-3 * b) / (4 + 4 * std::exp(-3 * b)), 1e-12);
        EXPECT_GT(internal_energy(spectrum(3), t), 0.0);
        EXPECT_EQ(concurrence(spectrum(3), t), 0.0);
    }
    EXPECT_NEAR(internal_energy(spectrum(2), 1e-3), -2.0, 1e-12);
    EXPECT_NEAR(internal_energy(spectrum(4), 1.72672823), 0.0, 1e-7);
    EXPECT_THROW((void)internal_energy(spectrum(4), 0.0), ArgumentError);
}

TEST(Thermodynamics, ConcurrenceMatchesClosedForms) {
    const double b1 = 1.0;
    const double c2 = (std::exp(2 * b1) - 3 * std::exp(-2 * b1)) / (std::exp(2 * b1) + 3 * std::exp(-2 * b1));
    EXPECT_NEAR(concurrence(spectrum(2), 1.0), c2, 1e-12);

    const double b = 2.0;
    const double z4 = 3 + std::exp(2 * b) + 7 * std::exp(-2 * b) + 5 * std::exp(-4 * b);
    const double c4 = (std::exp(2 * b) - 7 * std::exp(-2 * b) - 10 * std::exp(-4 * b)) / (2 * z4);
    EXPECT_NEAR(concurrence(spectrum(4), 0.5), c4, 1e-12);
    EXPECT_EQ(concurrence(spectrum(3), 0.7), 0.0);
}

// Closed forms vs the diagonalization pipeline, 50 log-spaced temperatures.
TEST(Thermodynamics, ClosedFormEquivalence) {
    for (int n : {2, 3, 4}) {
        for (double t : log_spaced(0.05, 50.0, 50)) {
            const double z_num = std::exp(log_partition_function(spectrum(n), t));
            const double z_ref = analytic_partition_function(n, t);
            EXPECT_LE(std::abs(z_num - z_ref) / z_ref, 1e-12) << n << " " << t;
            EXPECT_LE(std::abs(concurrence(spectrum(n), t) - analytic_concurrence(n, t)), 1e-12) << n << " " << t;
        }
    }
}

TEST(Thermodynamics, ObservablesInvariants) {
    for (int n = 2; n <= 11; ++n) {
        double prev_u = -1e300;
        double prev_c = 2.0;
        for (double t : log_spaced(0.01, 100.0, 120)) {
            const auto obs = thermal_observables(spectrum(n), t);
            EXPECT_GE(obs.u, prev_u) << n << " " << t;
            EXPECT_LE(obs.c, prev_c) << n << " " << t;
            EXPECT_GE(obs.c, 0.0);
            EXPECT_LE(obs.c, 1.0);
            EXPECT_EQ(obs.c, std::min(1.0, std::max(0.0, -obs.u / n)));
            prev_u = obs.u;
            prev_c = obs.c;
        }
        EXPECT_NEAR(internal_energy(spectrum(n), 1e-4), spectrum(n).ground_energy(), 1e-6);
        EXPECT_NEAR(internal_energy(spectrum(n), 1e6), n / 2.0, 1e-3);
    }
}

TEST(Thermodynamics, DerivativeFormAgrees) {
    for (int n : {2, 5, 8, 11}) {
        for (double t : {0.2, 0.9, 1.6, 4.0}) {
            const double beta = 1 / t, h = 1e-5;
            const double d = (log_partition_function(spectrum(n), 1 / (beta + h)) -
                              log_partition_function(spectrum(n), 1 / (beta - h))) / (2 * h);
            EXPECT_NEAR(-internal_energy(spectrum(n), t) / n, d / n, 1e-6);
        }
    }
}

TEST(Thermodynamics, GroundStateConcurrence) {
    EXPECT_NEAR(ground_state_concurrence(2), 1.0, 1e-12);
    EXPECT_EQ(ground_state_concurrence(3), 0.0);
    EXPECT_FALSE(std::signbit(ground_state_concurrence(3)));
    EXPECT_NEAR(ground_state_concurrence(4), 0.5, 1e-12);
    EXPECT_NEAR(ground_state_concurrence(6), 0.434, 5e-4);
    EXPECT_NEAR(ground_state_concurrence(11), 0.358, 5e-4);
    // numpy eigh on the dense 256x256 matrix: E_GS(8) = -3.302186817874.
    EXPECT_NEAR(ground_state_concurrence(8), 3.302186817874 / 8, 1e-10);
}

TEST(Thermodynamics, ThresholdsAgainstIndependentRoots) {
    // Frozen from a 30-digit mpmath root of U(T) = 0 on numpy spectra.
    const std::map<int, double> frozen{
        {2, 3.640956906507}, {4, 1.726728232303}, {5, 1.538255171023}, {6, 1.604671688756},
        {7, 1.585562863748}, {8, 1.591676545769}, {9, 1.589795969616}, {10, 1.590383687726},
        {11, 1.590201068059},
    };
    for (const auto& [n, t] : frozen) {
        const auto r = threshold_temperature(spectrum(n));
        EXPECT_EQ(r.n, n);
        EXPECT_NEAR(r.t_th, t, 1e-9) << "n = " << n;
        EXPECT_LE(r.bracket_width, kThresholdWidth);
        EXPECT_LE(std::abs(internal_energy(spectrum(n), r.t_th)), 1e-9);
        // Independent bisection on U, no shift, from this test.
        const auto& e = spectrum(n).values();
        auto u = [&](double temp) {
            double num = 0, den = 0;
            for (double x : e) {
                const double w = std::exp(-(x - e.front()) / temp);
                num += x * w;
                den += w;
            }
            return num / den;
        };
        EXPECT_NEAR(oracle::bisect(u, 0.5, 5.0, 1e-12), r.t_th, 1e-9);
    }
    EXPECT_NEAR(threshold_temperature(spectrum(2)).t_th, 4 / std::log(3.0), 1e-9);
    EXPECT_EQ(threshold_temperature(spectrum(3)).t_th, 0.0);
}

TEST(Thermodynamics, ThresholdOrdering) {
    std::map<int, double> t;
    for (int n = 2; n <= 11; ++n) t[n] = threshold_temperature(spectrum(n)).t_th;
    const std::vector<int> order{5, 7, 9, 11, 10, 8, 6, 4, 2};
    for (std::size_t i = 0; i + 1 < order.size(); ++i) EXPECT_LT(t[order[i]], t[order[i + 1]]);
}

TEST(Thermodynamics, ThermodynamicLimitEstimate) {
    std::vector<ThresholdResult> r;
    for (int n = 2; n <= 11; ++n) r.push_back(threshold_temperature(spectrum(n)));
    const auto est = estimate_thermodynamic_limit(r);
    EXPECT_EQ(est.n_odd, 11);
    EXPECT_EQ(est.n_even, 10);
    EXPECT_LT(est.lower, est.upper);
    EXPECT_NEAR(est.estimate, 1.5903, 5e-4);
    const std::vector<ThresholdResult> only_even{r[0], r[2]};
    EXPECT_THROW((void)estimate_thermodynamic_limit(only_even), ArgumentError);
    const std::vector<ThresholdResult> with_three{r[0], r[1]};
    EXPECT_THROW((void)estimate_thermodynamic_limit(with_three), ArgumentError);
}
