#pragma once

#include <stdexcept>
#include <string>

namespace heisenring {

/// Invalid arguments: qubit counts out of range, T <= 0, non-symmetric input.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The eigensolver exceeded its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double off_diagonal_norm)
        : std::runtime_error(what), off_diagonal_norm_(off_diagonal_norm) {}

    [[nodiscard]] double off_diagonal_norm() const noexcept { return off_diagonal_norm_; }

private:
    double off_diagonal_norm_;
};

/// A state that valid inputs cannot reach (e.g. root bracket expansion failed).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace heisenring
