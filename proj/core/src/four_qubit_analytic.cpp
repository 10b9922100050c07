#include "heisenring/four_qubit_analytic.hpp"

#include "heisenring/errors.hpp"
#include "heisenring/spin_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace heisenring::four_qubit {
namespace {

using cplx = std::complex<double>;

std::size_t ket(const char* s) { return BasisState::from_ket(s).bits; }

BasisState shifted(BasisState s, int times) {
    for (int i = 0; i < times; ++i) s = cyclic_shift(s);
    return s;
}

// T^{n-1}|seed> for n = 1..count, as indices.
std::vector<std::size_t> orbit(const char* seed, int count) {
    std::vector<std::size_t> out;
    for (int n = 1; n <= count; ++n) out.push_back(shifted(BasisState::from_ket(seed), n - 1).bits);
    return out;
}

double norm(const Amplitudes& v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return std::sqrt(s);
}

cplx inner(const Amplitudes& a, const Amplitudes& b) {
    cplx s{};
    for (std::size_t i = 0; i < kDim; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace

std::array<AnalyticEigenpair, kDim> analytic_eigensystem() {
    std::array<AnalyticEigenpair, kDim> out{};
    for (std::size_t i = 0; i < kDim; ++i) out[i].label = static_cast<int>(i);

    out[0].energy = 4.0;
    out[0].amplitudes[ket("0000")] = 1.0;
    out[0].formula = "|0000>";
    out[15].energy = 4.0;
    out[15].amplitudes[ket("1111")] = 1.0;
    out[15].formula = "|1111>";

    // One-magnon plane waves and their global flips.
    const auto magnon = orbit("1000", 4);
    const BasisState one_flip = BasisState::from_ket("1000");
    for (int k = 1; k <= 4; ++k) {
        const cplx t_k = std::polar(1.0, std::numbers::pi * k / 2.0);
        const double e_k = (2.0 + t_k + 1.0 / t_k).real();
        auto& psi = out[static_cast<std::size_t>(k)];
        auto& flipped = out[static_cast<std::size_t>(k + 4)];
        psi.energy = flipped.energy = e_k;
        for (int n = 1; n <= 4; ++n) {
            const cplx c = 0.5 * std::pow(t_k, -n);
            psi.amplitudes[magnon[static_cast<std::size_t>(n - 1)]] += c;
            flipped.amplitudes[global_flip(shifted(one_flip, n - 1)).bits] += c;
        }
        psi.formula = "1/2 sum_n t_" + std::to_string(k) + "^-n |n>_0";
        flipped.formula = "Lambda_x Psi_" + std::to_string(k);
    }

    const auto pairs = orbit("1100", 4);
    const auto neel = orbit("1010", 2);

    out[9].energy = -2.0;
    for (auto s : pairs) out[9].amplitudes[s] += 1.0 / (2.0 * std::sqrt(3.0));
    for (auto s : neel) out[9].amplitudes[s] += -2.0 / (2.0 * std::sqrt(3.0));
    out[9].formula = "(sum T^n|1100> - 2 sum T^n|1010>)/(2 sqrt 3)";

    const double r2 = 1.0 / std::numbers::sqrt2;
    out[10].energy = 0.0;
    out[10].amplitudes[ket("1010")] = r2;
    out[10].amplitudes[ket("0101")] = -r2;
    out[10].formula = "(|1010> - |0101>)/sqrt 2";

    out[11].energy = 2.0;
    out[11].amplitudes[ket("1100")] = r2;
    out[11].amplitudes[ket("0011")] = -r2;
    out[11].formula = "(|1100> - |0011>)/sqrt 2";

    out[12].energy = 2.0;
    out[12].amplitudes[ket("1001")] = r2;
    out[12].amplitudes[ket("0110")] = -r2;
    out[12].formula = "(|1001> - |0110>)/sqrt 2";

    out[13].energy = 2.0;
    out[13].amplitudes[ket("1100")] = 0.5;
    out[13].amplitudes[ket("0011")] = 0.5;
    out[13].amplitudes[ket("1001")] = -0.5;
    out[13].amplitudes[ket("0110")] = -0.5;
    out[13].formula = "(|1100> + |0011> - |1001> - |0110>)/2";

    out[14].energy = 4.0;
    for (auto s : pairs) out[14].amplitudes[s] += 1.0 / std::sqrt(6.0);
    for (auto s : neel) out[14].amplitudes[s] += 1.0 / std::sqrt(6.0);
    out[14].formula = "(sum T^n|1100> + sum T^n|1010>)/sqrt 6";

    return out;
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const auto& p : pairs) m = std::max(m, p.residual);
    return m;
}

double VerificationReport::max_span_defect() const {
    double m = 0.0;
    for (const auto& p : pairs) m = std::max(m, p.span_defect);
    return m;
}

std::vector<int> VerificationReport::failing_labels() const {
    std::vector<int> out;
    for (const auto& p : pairs)
        if (!p.passed) out.push_back(p.label);
    return out;
}

bool VerificationReport::passed() const {
    return failing_labels().empty() && completeness_defect <= kCompletenessTolerance &&
           orthonormality_defect <= kCompletenessTolerance && ground_overlap >= 1.0 - kSpanTolerance;
}

VerificationReport verify_against_numeric(const FullSpectrum& spectrum) {
    if (spectrum.n() != kQubits || !spectrum.has_vectors())
        throw ArgumentError("verify_against_numeric: need the N = 4 spectrum with eigenvectors");

    const auto states = analytic_eigensystem();
    const Matrix h = full_hamiltonian(kQubits);

    struct NumericPair {
        double energy;
        std::vector<double> v;
    };
    std::vector<NumericPair> numeric;
    for (const auto& block : spectrum.sectors())
        for (std::size_t j = 0; j < block.eig.dim(); ++j)
            numeric.push_back({block.eig.values[j], embed(block.sector, block.eig.vector(j))});

    VerificationReport report;
    for (const auto& st : states) {
        EigenpairCheck check;
        check.label = st.label;
        check.energy = st.energy;
        check.norm_defect = std::abs(norm(st.amplitudes) - 1.0);

        double res = 0.0;
        for (std::size_t r = 0; r < kDim; ++r) {
            cplx hv{};
            for (std::size_t c = 0; c < kDim; ++c) hv += h(r, c) * st.amplitudes[c];
            res += std::norm(hv - st.energy * st.amplitudes[r]);
        }
        check.residual = std::sqrt(res);

        Amplitudes projected{};
        for (const auto& np : numeric) {
            if (std::abs(np.energy - st.energy) > kDegeneracyTolerance * std::max(1.0, std::abs(st.energy))) continue;
            cplx o{};
            for (std::size_t i = 0; i < kDim; ++i) o += np.v[i] * st.amplitudes[i];
            for (std::size_t i = 0; i < kDim; ++i) projected[i] += o * np.v[i];
        }
        double defect = 0.0;
        for (std::size_t i = 0; i < kDim; ++i) defect += std::norm(st.amplitudes[i] - projected[i]);
        check.span_defect = std::sqrt(defect);

        check.passed = check.norm_defect <= kNormTolerance && check.residual <= kResidualTolerance &&
                       check.span_defect <= kSpanTolerance;
        report.pairs.push_back(check);
    }

    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const cplx g = inner(states[i].amplitudes, states[j].amplitudes);
            report.orthonormality_defect =
                std::max(report.orthonormality_defect, std::abs(g - cplx(i == j ? 1.0 : 0.0)));

            cplx p{};
            for (const auto& st : states) p += st.amplitudes[i] * std::conj(st.amplitudes[j]);
            report.completeness_defect = std::max(report.completeness_defect, std::abs(p - cplx(i == j ? 1.0 : 0.0)));
        }
    }

    const auto ground = spectrum.full_vector(spectrum.n() / 2, 0);
    cplx o{};
    for (std::size_t i = 0; i < kDim; ++i) o += ground[i] * std::conj(states[9].amplitudes[i]);
    report.ground_overlap = std::abs(o);
    return report;
}

double analytic_thermal_fidelity(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw ArgumentError("analytic_thermal_fidelity: temperature must be positive and finite");
    const double b = 1.0 / t;
    // Numerator and denominator divided by e^{2b}.
    const double num = std::exp(-6 * b) / 3.0 + 2.0 / 3.0;
    const double den = 3 * std::exp(-2 * b) + 1 + 7 * std::exp(-4 * b) + 5 * std::exp(-6 * b);
    return num / den;
}

} // namespace heisenring::four_qubit
