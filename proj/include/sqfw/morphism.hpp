#pragma once

#include "sqfw/words.hpp"

namespace sqfw {

/// Default cap on expansion depth: 3^13 is about 1.6M symbols, tens of MB at
/// peak while iterating. The CLI can raise it via SQFW_MAX_DEPTH.
inline constexpr unsigned kDefaultMaxDepth = 13;

/// Symbol-wise swap of 1 and 2 (3 fixed). Involution.
Word swap12(const Word& w);

/// Symbol-wise swap of 2 and 3 (1 fixed). Involution.
Word swap23(const Word& w);

/// One rewriting step of the length-tripling morphism:
/// expand(w) = swap12(w) . w . swap23(w).
Word expand(const Word& w);

/// n rewriting steps from an arbitrary ternary seed word.
/// Throws ResourceLimitError if n exceeds max_depth.
Word expand_iterate(const Word& seed, unsigned n, unsigned max_depth = kDefaultMaxDepth);

/// The canonical square-free word of length 3^n: n expansion steps from the
/// single-symbol seed "2". Computed iteratively, O(3^n) time total.
Word squarefree_word(unsigned n, unsigned max_depth = kDefaultMaxDepth);

/// Keeps the middle symbol of each aligned 3-block, i.e. the symbols at
/// positions 3k+1. Requires |w| divisible by 3; inverse direction of one
/// expansion step on canonical words: center_extract(squarefree_word(n)) ==
/// squarefree_word(n-1).
Word center_extract(const Word& w);

/// squarefree_word(n) as a two-sided window centered at (3^n-1)/2, so that
/// logical indices run over [-(3^n-1)/2, (3^n-1)/2]. Windows nest: level n
/// agrees with level n+1 on all shared indices.
TwoSidedWindow squarefree_window(unsigned n, unsigned max_depth = kDefaultMaxDepth);

}  // namespace sqfw
