#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sqfw/balanced_ternary.hpp"
#include "sqfw/words.hpp"

namespace sqfw {

/// Default cap on the number of symbols squarefree_range may materialize
/// (3^13, matching kDefaultMaxDepth on the morphism side).
inline constexpr std::size_t kDefaultRangeCap = 1594323;

/// A deterministic finite automaton with output: a finite state set with one
/// initial state, a total per-digit transition function, and an output symbol
/// attached to each state. Running it over a digit string (low digit first)
/// yields the output of the final state; the empty string yields the output
/// of the initial state.
class Dfao {
public:
    struct State {
        std::string label;   ///< display label, e.g. "q0/0"
        std::int8_t output;  ///< output symbol of the state
    };

    /// `transitions` is row-major: target of (state s, digit d) sits at
    /// s * |digits| + index-of-d. `digit_labels` are the display strings used
    /// by to_dot; when empty, decimal rendering is used.
    Dfao(std::vector<std::int8_t> input_digits,
         std::vector<State> states,
         std::size_t initial_state,
         std::vector<std::size_t> transitions,
         std::vector<std::string> digit_labels = {});

    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t initial_state() const noexcept { return initial_; }
    std::span<const std::int8_t> input_digits() const noexcept { return input_digits_; }
    const State& state(std::size_t s) const { return states_.at(s); }

    /// Target state of (state, digit). Throws std::invalid_argument for a
    /// digit outside the input alphabet.
    std::size_t transition(std::size_t state, std::int8_t digit) const;

    /// Folds the transition over the digits (lowest first) starting from the
    /// initial state and returns the output of the state reached.
    std::int8_t run(std::span<const std::int8_t> digits_low_to_high) const;
    std::int8_t run(const BalancedDigits& digits) const { return run(digits.digits()); }

    /// True when every fixed digit permutes the state set.
    bool transitions_are_permutations() const;

    /// GraphViz rendering: one node statement per state (label "name/output",
    /// the initial state marked), edges grouped by target with digit labels
    /// joined by commas. Deterministic output ordering.
    std::string to_dot() const;

private:
    std::size_t digit_index(std::int8_t digit) const;

    std::vector<std::int8_t> input_digits_;
    std::vector<State> states_;
    std::size_t initial_;
    std::vector<std::size_t> transitions_;
    std::vector<std::string> digit_labels_;
};

/// The 3-state machine over balanced-ternary digits that generates the
/// two-sided square-free sequence. States carry outputs -1, 0, +1; the
/// initial state outputs 0. The digit -1 swaps the states outputting -1 and
/// 0, the digit 0 changes nothing, and the digit +1 swaps the states
/// outputting 0 and +1 -- so each digit acts as a permutation of the states.
Dfao squarefree_dfao();

/// Value of the two-sided square-free sequence at index i: run the machine
/// over the balanced-ternary digits of i. O(log|i|).
std::int8_t squarefree_at(std::int64_t i);

/// The balanced word of sequence values for lo..hi inclusive. Computed
/// pointwise; throws ResourceLimitError when the range exceeds size_cap and
/// std::invalid_argument when lo > hi.
Word squarefree_range(std::int64_t lo, std::int64_t hi, std::size_t size_cap = kDefaultRangeCap);

}  // namespace sqfw
