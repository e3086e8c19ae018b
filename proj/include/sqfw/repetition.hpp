#pragma once

#include <cstddef>
#include <optional>

#include "sqfw/words.hpp"

namespace sqfw {

/// A square factor ww found in a word: the factor occupies
/// [position, position + 2*half_length) and its two halves are equal.
struct SquareWitness {
    std::size_t position = 0;
    std::size_t half_length = 0;

    friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

/// Checks the witness invariant against a word: the factor fits and
/// w[p+k] == w[p+l+k] for all 0 <= k < l.
bool witness_valid(const Word& w, const SquareWitness& witness);

/// Transparent brute-force oracle: scans start positions ascending, then
/// half-lengths ascending, and returns the first square found. Quadratic-ish
/// with early exit; the ground truth the fast detector is validated against.
std::optional<SquareWitness> find_square_naive(const Word& w);

/// Divide-and-conquer square detector (split the word, recurse, then find
/// squares crossing the split with Z-function extension lengths). O(n log n).
/// Returns some valid witness, not necessarily the oracle's.
std::optional<SquareWitness> find_square(const Word& w);

/// True iff w contains no square factor. Uses find_square.
bool is_squarefree(const Word& w);

/// Searches only squares with half-length <= max_half_length, positions
/// ascending; returns the first or nullopt. Useful for checking the short
/// squares that could straddle block joints.
std::optional<SquareWitness> check_boundary_squares(const Word& w, std::size_t max_half_length);

}  // namespace sqfw
