#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqfw/morphism.hpp"

namespace sqfw {

/// One verification check: name, rendered parameters, outcome, and either a
/// concrete counterexample (on fail) or an informational note. `ms` is wall
/// time; everything else is deterministic for a fixed config and seed.
struct CheckResult {
    std::string name;
    std::string params;
    bool pass = true;
    std::string witness;
    double ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t fail_count() const;

    /// One JSON object per line with fields {name, params, status, witness, ms}.
    std::string to_jsonl() const;

    /// Human-readable outcome: one line per check plus a count summary.
    std::string summary() const;
};

struct VerifyConfig {
    unsigned n_max = 9;              ///< sweep bound for the word-level checks
    unsigned naive_n_max = 6;        ///< depth up to which the brute-force oracle cross-checks
    unsigned antisymmetry_n_max = 6; ///< probe bound for the reflection check
    unsigned thue_morse_log2 = 16;   ///< definition equivalence checked for i < 2^this
    unsigned gap_word_log2 = 14;     ///< gap word derived from a prefix of 2^this symbols
    std::uint64_t seed = 20260808;   ///< seed for the randomized oracle agreement check
    bool fault_inject = false;       ///< corrupt one symbol per generated word (negative control)
    unsigned max_depth = kDefaultMaxDepth;
};

/// Square-freeness of the expanded words for n = 1..n_max via the fast
/// detector, with the brute-force oracle concurring for n <= naive_n_max.
CheckResult verify_iterates_squarefree(unsigned n_max, unsigned naive_n_max = 6);

/// Every aligned 3-block of the level-n word has three pairwise distinct
/// symbols. Requires n >= 1.
CheckResult verify_block_permutations(unsigned n);

/// center_extract of the level-n word equals the level-(n-1) word exactly.
/// Requires n >= 1.
CheckResult verify_center_extraction(unsigned n);

/// The automaton route equals the morphism route: squarefree_range over the
/// centered window of level n equals the relabeled level-n word, for
/// n = 1..n_max.
CheckResult verify_route_agreement(unsigned n_max);

/// Runs every check plus the reference-sequence properties and assembles the
/// report. Deterministic apart from timings. With fault_inject set, each
/// generated word is corrupted in one position so that at least one check
/// must fail with a localizing witness.
VerificationReport verify_all(const VerifyConfig& config = {});

}  // namespace sqfw
