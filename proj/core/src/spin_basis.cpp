#include "heisenring/spin_basis.hpp"

#include "heisenring/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace heisenring {

int BasisState::popcount() const noexcept { return std::popcount(bits); }

std::string BasisState::to_ket() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(qubit(i) ? '1' : '0');
    return out;
}

BasisState BasisState::from_ket(const std::string& ket) {
    std::string body = ket;
    if (!body.empty() && body.front() == '|') body.erase(body.begin());
    if (!body.empty() && body.back() == '>') body.pop_back();
    if (body.empty() || body.size() > static_cast<std::size_t>(kMaxBasisQubits))
        throw ArgumentError("ket must contain 1.." + std::to_string(kMaxBasisQubits) + " qubits: '" + ket + "'");
    BasisState s{0, static_cast<int>(body.size())};
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '1') s.bits |= std::uint32_t{1} << i;
        else if (body[i] != '0') throw ArgumentError("ket may only contain 0 and 1: '" + ket + "'");
    }
    return s;
}

BasisState cyclic_shift(BasisState s) {
    // New qubit k+1 takes the old qubit k; qubit N wraps to qubit 1.
    const std::uint32_t top = (s.bits >> (s.n - 1)) & 1u;
    return {((s.bits << 1) | top) & s.mask(), s.n};
}

BasisState global_flip(BasisState s) { return {~s.bits & s.mask(), s.n}; }

BasisState neel_state(int n) {
    if (n < 1 || n > kMaxBasisQubits) throw ArgumentError("neel_state: qubit count out of range");
    BasisState s{0, n};
    for (int i = 1; i < n; i += 2) s.bits |= std::uint32_t{1} << i;
    return s;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

Sector::Sector(int n, int n_up) : n_(n), n_up_(n_up) {
    if (n < 2 || n > kMaxBasisQubits)
        throw ArgumentError("enumerate_sector: n must be in [2, " + std::to_string(kMaxBasisQubits) + "], got " +
                            std::to_string(n));
    if (n_up < 0 || n_up > n)
        throw ArgumentError("enumerate_sector: n_up must be in [0, n], got " + std::to_string(n_up));

    const std::size_t count = binomial(n, n_up);
    states_.reserve(count);
    index_.reserve(count);
    if (n_up == 0) {
        states_.push_back({0, n});
    } else {
        // Gosper's hack walks fixed-popcount masks in ascending order.
        const std::uint64_t limit = std::uint64_t{1} << n;
        std::uint64_t v = (std::uint64_t{1} << n_up) - 1;
        while (v < limit) {
            states_.push_back({static_cast<std::uint32_t>(v), n});
            const std::uint64_t t = v | (v - 1);
            v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        }
    }
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i].bits, i);
}

bool Sector::contains(BasisState s) const { return s.n == n_ && index_.contains(s.bits); }

std::size_t Sector::index_of(BasisState s) const {
    if (s.n == n_) {
        if (auto it = index_.find(s.bits); it != index_.end()) return it->second;
    }
    throw ArgumentError("state " + s.to_ket() + " is not in sector (n=" + std::to_string(n_) +
                        ", n_up=" + std::to_string(n_up_) + ")");
}

Sector enumerate_sector(int n, int n_up) { return Sector(n, n_up); }

} // namespace heisenring
