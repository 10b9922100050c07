#pragma once

// Test-only reference implementations. Nothing here shares code with the
// library's bond/bitmask Hamiltonian or its Householder-QL eigensolver.

#include <heisenring/matrix.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

class CMatrix {
public:
    CMatrix(std::size_t n = 0) : n_(n), d_(n * n) {}
    static CMatrix identity(std::size_t n) {
        CMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    cplx& operator()(std::size_t r, std::size_t c) { return d_[r * n_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return d_[r * n_ + c]; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<cplx> d_;
};

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) out(i * b.size() + k, j * b.size() + l) = a(i, j) * b(k, l);
    return out;
}

inline CMatrix pauli(int which) {
    CMatrix s(2);
    const cplx i(0.0, 1.0);
    switch (which) {
    case 0: s(0, 0) = 1; s(1, 1) = 1; break;
    case 1: s(0, 1) = 1; s(1, 0) = 1; break;
    case 2: s(0, 1) = -i; s(1, 0) = i; break;
    default: s(0, 0) = 1; s(1, 1) = -1; break;
    }
    return s;
}

// Operator acting with `op_i` on site i and `op_j` on site j. Sites are placed
// so that site k occupies bit k of the basis index (site 0 is the least
// significant tensor factor).
inline CMatrix two_site(int n, int i, int j, const CMatrix& op_i, const CMatrix& op_j) {
    CMatrix out = CMatrix::identity(1);
    for (int k = n - 1; k >= 0; --k) {
        const CMatrix& f = (k == i) ? op_i : (k == j) ? op_j : pauli(0);
        out = kron(out, f);
    }
    return out;
}

// H = sum_{k} (1 + sigma_k . sigma_{k+1}) / 2 around the ring, built from
// Kronecker products of Pauli matrices.
inline heisenring::Matrix pauli_ring_hamiltonian(int n) {
    const std::size_t dim = std::size_t{1} << n;
    CMatrix h(dim);
    for (int k = 0; k < n; ++k) {
        const int l = (k + 1) % n;
        for (std::size_t d = 0; d < dim; ++d) h(d, d) += 0.5;
        for (int a = 1; a <= 3; ++a) {
            const CMatrix term = two_site(n, k, l, pauli(a), pauli(a));
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c) h(r, c) += 0.5 * term(r, c);
        }
    }
    heisenring::Matrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) out(r, c) = h(r, c).real();
    return out;
}

struct JacobiResult {
    std::vector<double> values;           // ascending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};

// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
inline JacobiResult jacobi(heisenring::Matrix a) {
    const std::size_t n = a.rows();
    heisenring::Matrix v = heisenring::Matrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });
    JacobiResult r;
    for (auto i : order) {
        r.values.push_back(a(i, i));
        std::vector<double> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v(k, i);
        r.vectors.push_back(std::move(col));
    }
    return r;
}

// Bisection on a monotone-increasing f with f(lo) < 0 < f(hi).
template <class F>
double bisect(F f, double lo, double hi, double width) {
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace oracle
