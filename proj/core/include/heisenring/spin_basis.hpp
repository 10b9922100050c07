#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace heisenring {

/// Largest ring the bitmask basis supports.
inline constexpr int kMaxBasisQubits = 30;

/**
 * @brief A computational-basis ket of an N-qubit ring.
 *
 * Bit i (LSB = 0) holds the state of qubit i+1, so |m1 m2 ... mN> has m1 in
 * bit 0. The ket string printed by to_ket() lists qubit 1 first.
 */
struct BasisState {
    std::uint32_t bits = 0;
    int n = 0;

    constexpr auto operator<=>(const BasisState&) const = default;

    [[nodiscard]] constexpr std::uint32_t mask() const noexcept {
        return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u);
    }
    [[nodiscard]] constexpr bool valid() const noexcept {
        return n >= 1 && n <= kMaxBasisQubits && (bits & ~mask()) == 0;
    }
    [[nodiscard]] constexpr int qubit(int i) const noexcept { return static_cast<int>((bits >> i) & 1u); }
    [[nodiscard]] int popcount() const noexcept;

    /// "|m1 m2 ... mN>" without spaces, qubit 1 first.
    [[nodiscard]] std::string to_ket() const;

    /// Parses "1010" or "|1010>", qubit 1 first.
    static BasisState from_ket(const std::string& ket);
};

/// Cyclic right shift: T|m1 m2 ... mN> = |mN m1 ... m(N-1)>.
[[nodiscard]] BasisState cyclic_shift(BasisState s);

/// Complements every qubit (the sigma_x tensor power).
[[nodiscard]] BasisState global_flip(BasisState s);

/// Alternating state |0101...>, qubit 1 = 0.
[[nodiscard]] BasisState neel_state(int n);

/// Fixed-magnetization block: every ket with exactly n_up set bits.
class Sector {
public:
    Sector(int n, int n_up);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int n_up() const noexcept { return n_up_; }
    /// Collective S_z = n_up - N/2.
    [[nodiscard]] double sz() const noexcept { return n_up_ - 0.5 * n_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }

    [[nodiscard]] const std::vector<BasisState>& states() const noexcept { return states_; }
    [[nodiscard]] const BasisState& operator[](std::size_t i) const noexcept { return states_[i]; }

    [[nodiscard]] bool contains(BasisState s) const;
    /// Position of s in states(); throws ArgumentError if absent.
    [[nodiscard]] std::size_t index_of(BasisState s) const;

private:
    int n_;
    int n_up_;
    std::vector<BasisState> states_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// Ascending-bitmask enumeration of the (n, n_up) sector.
[[nodiscard]] Sector enumerate_sector(int n, int n_up);

[[nodiscard]] std::uint64_t binomial(int n, int k);

} // namespace heisenring
