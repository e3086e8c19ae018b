#pragma once

#include <cstdint>
#include <vector>

#include "sqfw/dfao.hpp"
#include "sqfw/words.hpp"

namespace sqfw {

/// Default cap on Thue-Morse doubling depth (2^20 symbols, ~1 MB).
inline constexpr unsigned kDefaultThueMorseMaxDepth = 20;

/// The Thue-Morse prefix of length 2^n by iterated doubling: each step
/// appends the complement of the word so far, starting from "0".
Word thue_morse_iterate(unsigned n, unsigned max_depth = kDefaultThueMorseMaxDepth);

/// Direct definition: parity of the binary digit sum of i.
std::int8_t thue_morse_at(std::uint64_t i);

/// Counts of 1s strictly between consecutive 0s of a Thue-Morse prefix; the
/// classic square-free ternary word over {0, 1, 2}. Throws
/// std::invalid_argument when the input has fewer than two 0s and
/// std::domain_error when some gap holds more than two 1s (the input was not
/// a Thue-Morse prefix).
Word ones_between_zeros(const Word& thue_morse_prefix);

/// 2-state DFAO over binary digits: digit 1 swaps the states, digit 0 keeps
/// them. Both transitions commute, so the read order of the digits does not
/// matter; run over the binary digits of i it reproduces thue_morse_at(i).
Dfao thue_morse_dfao();

/// Binary digits of i, lowest first; empty for 0.
std::vector<std::int8_t> binary_digits(std::uint64_t i);

/// thue_morse_dfao run over binary_digits(i).
std::int8_t thue_morse_automatic(std::uint64_t i);

}  // namespace sqfw
