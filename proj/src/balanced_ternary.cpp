#include "sqfw/balanced_ternary.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace sqfw {

BalancedDigits::BalancedDigits(std::vector<std::int8_t> digits_low_to_high)
    : digits_(std::move(digits_low_to_high)) {
    for (std::int8_t d : digits_) {
        if (d < -1 || d > 1) {
            throw std::invalid_argument("balanced-ternary digit " + std::to_string(static_cast<int>(d)) +
                                        " outside {-1, 0, +1}");
        }
    }
    if (!digits_.empty() && digits_.back() == 0) {
        throw std::invalid_argument("balanced-ternary digits must not have a zero highest digit");
    }
}

BalancedDigits BalancedDigits::encode(std::int64_t i) {
    BalancedDigits out;
    while (i != 0) {
        std::int64_t quotient = i / 3;
        const std::int64_t remainder = i % 3;  // truncated, in [-2, 2]
        std::int8_t digit;
        if (remainder == 2) {
            digit = -1;
            quotient += 1;
        } else if (remainder == -2) {
            digit = 1;
            quotient -= 1;
        } else {
            digit = static_cast<std::int8_t>(remainder);
        }
        out.digits_.push_back(digit);
        i = quotient;
    }
    return out;
}

std::int64_t BalancedDigits::decode() const {
    // 41 digits can exceed int64 while every 40-digit value fits; values with
    // 42+ digits always overflow. __int128 holds any 41-digit sum exactly.
    if (digits_.size() > 41) {
        throw std::overflow_error("balanced-ternary value with " + std::to_string(digits_.size()) +
                                  " digits does not fit in a 64-bit integer");
    }
    __int128 value = 0;
    __int128 weight = 1;
    for (std::int8_t d : digits_) {
        value += weight * d;
        weight *= 3;
    }
    if (value < std::numeric_limits<std::int64_t>::min() || value > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("balanced-ternary value does not fit in a 64-bit integer");
    }
    return static_cast<std::int64_t>(value);
}

std::string BalancedDigits::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        out.push_back(*it < 0 ? '-' : (*it == 0 ? '0' : '+'));
    }
    return out;
}

}  // namespace sqfw
