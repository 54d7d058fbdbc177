#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fideal {

/// Bad user input: out-of-range parameters, malformed text, violated preconditions.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
    InputError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    [[nodiscard]] std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::optional<std::size_t> position_;
};

/// A search or scan would exceed its configured limit. Nothing partial is returned.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction met its stated preconditions but the result is not an f-ideal.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not. Always a bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fideal
