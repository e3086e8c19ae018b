#include "sqfw/dfao.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sqfw {

Dfao::Dfao(std::vector<std::int8_t> input_digits,
           std::vector<State> states,
           std::size_t initial_state,
           std::vector<std::size_t> transitions,
           std::vector<std::string> digit_labels)
    : input_digits_(std::move(input_digits)),
      states_(std::move(states)),
      initial_(initial_state),
      transitions_(std::move(transitions)),
      digit_labels_(std::move(digit_labels)) {
    if (states_.empty()) throw std::invalid_argument("a DFAO needs at least one state");
    if (input_digits_.empty()) throw std::invalid_argument("a DFAO needs a nonempty input alphabet");
    for (std::size_t k = 0; k < input_digits_.size(); ++k) {
        for (std::size_t j = k + 1; j < input_digits_.size(); ++j) {
            if (input_digits_[k] == input_digits_[j]) {
                throw std::invalid_argument("duplicate input digit " +
                                            std::to_string(static_cast<int>(input_digits_[k])));
            }
        }
    }
    if (initial_ >= states_.size()) {
        throw std::invalid_argument("initial state " + std::to_string(initial_) + " out of range");
    }
    if (transitions_.size() != states_.size() * input_digits_.size()) {
        throw std::invalid_argument("transition table must have one entry per (state, digit) pair");
    }
    for (std::size_t target : transitions_) {
        if (target >= states_.size()) {
            throw std::invalid_argument("transition target " + std::to_string(target) + " out of range");
        }
    }
    if (digit_labels_.empty()) {
        for (std::int8_t d : input_digits_) digit_labels_.push_back(std::to_string(static_cast<int>(d)));
    } else if (digit_labels_.size() != input_digits_.size()) {
        throw std::invalid_argument("digit label count must match the input alphabet");
    }
}

std::size_t Dfao::digit_index(std::int8_t digit) const {
    for (std::size_t k = 0; k < input_digits_.size(); ++k) {
        if (input_digits_[k] == digit) return k;
    }
    throw std::invalid_argument("digit " + std::to_string(static_cast<int>(digit)) +
                                " is not in the machine's input alphabet");
}

std::size_t Dfao::transition(std::size_t state, std::int8_t digit) const {
    if (state >= states_.size()) {
        throw std::invalid_argument("state " + std::to_string(state) + " out of range");
    }
    return transitions_[state * input_digits_.size() + digit_index(digit)];
}

std::int8_t Dfao::run(std::span<const std::int8_t> digits_low_to_high) const {
    std::size_t state = initial_;
    for (std::int8_t digit : digits_low_to_high) {
        state = transitions_[state * input_digits_.size() + digit_index(digit)];
    }
    return states_[state].output;
}

bool Dfao::transitions_are_permutations() const {
    std::vector<bool> seen(states_.size());
    for (std::size_t d = 0; d < input_digits_.size(); ++d) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t s = 0; s < states_.size(); ++s) {
            const std::size_t target = transitions_[s * input_digits_.size() + d];
            if (seen[target]) return false;
            seen[target] = true;
        }
    }
    return true;
}

std::string Dfao::to_dot() const {
    std::string out = "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t s = 0; s < states_.size(); ++s) {
        out += "  \"" + states_[s].label + "\"";
        if (s == initial_) out += " [style=bold]; // initial";
        else out += ";";
        out += "\n";
    }
    for (std::size_t s = 0; s < states_.size(); ++s) {
        for (std::size_t target = 0; target < states_.size(); ++target) {
            std::string label;
            for (std::size_t d = 0; d < input_digits_.size(); ++d) {
                if (transitions_[s * input_digits_.size() + d] != target) continue;
                if (!label.empty()) label += ",";
                label += digit_labels_[d];
            }
            if (label.empty()) continue;
            out += "  \"" + states_[s].label + "\" -> \"" + states_[target].label + "\" [label=\"" +
                   label + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

Dfao squarefree_dfao() {
    // states indexed 0,1,2 with outputs -1,0,+1; digit d sends the state with
    // output a to the state with output pi_d(a), where pi_{-1} swaps -1 and 0
    // and pi_{+1} swaps 0 and +1.
    const std::vector<std::int8_t> digits{-1, 0, 1};
    std::vector<Dfao::State> states{{"q-1/-1", -1}, {"q0/0", 0}, {"q+1/+1", 1}};
    const std::vector<std::size_t> transitions{
        // digit: -1  0  +1
        1, 0, 0,  // from q-1
        0, 1, 2,  // from q0
        2, 2, 1,  // from q+1
    };
    return Dfao(digits, std::move(states), 1, transitions, {"-1", "0", "+1"});
}

std::int8_t squarefree_at(std::int64_t i) {
    static const Dfao machine = squarefree_dfao();
    return machine.run(BalancedDigits::encode(i));
}

Word squarefree_range(std::int64_t lo, std::int64_t hi, std::size_t size_cap) {
    if (lo > hi) {
        throw std::invalid_argument("invalid range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    }
    // unsigned wraparound handles the full int64 span; count 0 means 2^64
    const std::uint64_t count = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (count == 0 || count > size_cap) {
        throw ResourceLimitError("range of " + std::to_string(count) + " symbols exceeds the cap of " +
                                 std::to_string(size_cap));
    }
    Word out(Alphabet::Balanced);
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = lo;; ++i) {
        out.push_back(squarefree_at(i));
        if (i == hi) break;  // hi may be INT64_MAX
    }
    return out;
}

}  // namespace sqfw
