#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqfw {

/// Balanced-ternary digit string of a signed integer, stored low-to-high
/// (digit for 3^0 first). Digits are in {-1, 0, +1} and, when nonempty, the
/// highest digit is nonzero; the empty string represents 0. Every integer
/// has exactly one such representation.
class BalancedDigits {
public:
    BalancedDigits() = default;  // zero
    explicit BalancedDigits(std::vector<std::int8_t> digits_low_to_high);

    /// Digits of i, by repeated division with the remainder normalized into
    /// {-1, 0, +1}. Total for all of int64.
    static BalancedDigits encode(std::int64_t i);

    /// Sum of digit * 3^position. Throws std::overflow_error if the value
    /// does not fit in int64.
    std::int64_t decode() const;

    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    std::int8_t operator[](std::size_t pos) const noexcept { return digits_[pos]; }
    std::span<const std::int8_t> digits() const noexcept { return digits_; }

    /// High-to-low rendering over {'-','0','+'}; "" for zero.
    /// Example: encode(8).str() == "+0-".
    std::string str() const;

    friend bool operator==(const BalancedDigits&, const BalancedDigits&) = default;

private:
    std::vector<std::int8_t> digits_;
};

}  // namespace sqfw
