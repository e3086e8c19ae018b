#include "sqfw/reference_sequences.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace sqfw {

Word thue_morse_iterate(unsigned n, unsigned max_depth) {
    if (n > max_depth) {
        throw ResourceLimitError("doubling depth " + std::to_string(n) + " exceeds the configured cap " +
                                 std::to_string(max_depth));
    }
    std::vector<std::int8_t> symbols{0};
    symbols.reserve(std::size_t{1} << n);
    for (unsigned step = 0; step < n; ++step) {
        const std::size_t half = symbols.size();
        for (std::size_t k = 0; k < half; ++k) {
            symbols.push_back(static_cast<std::int8_t>(1 - symbols[k]));
        }
    }
    return Word(Alphabet::Binary, std::move(symbols));
}

std::int8_t thue_morse_at(std::uint64_t i) {
    return static_cast<std::int8_t>(std::popcount(i) & 1);
}

Word ones_between_zeros(const Word& thue_morse_prefix) {
    if (thue_morse_prefix.alphabet() != Alphabet::Binary) {
        throw std::invalid_argument("ones_between_zeros expects a binary word, got " +
                                    std::string(alphabet_name(thue_morse_prefix.alphabet())));
    }
    std::vector<std::int8_t> counts;
    bool seen_zero = false;
    int ones = 0;
    for (std::int8_t s : thue_morse_prefix.symbols()) {
        if (s == 1) {
            if (seen_zero) ++ones;
            continue;
        }
        if (seen_zero) {
            if (ones > 2) {
                throw std::domain_error("gap with " + std::to_string(ones) +
                                        " ones: not a Thue-Morse prefix");
            }
            counts.push_back(static_cast<std::int8_t>(ones));
        }
        seen_zero = true;
        ones = 0;
    }
    if (counts.empty()) {
        throw std::invalid_argument("ones_between_zeros needs at least two 0s in the input");
    }
    return Word(Alphabet::Counts012, std::move(counts));
}

Dfao thue_morse_dfao() {
    const std::vector<std::int8_t> digits{0, 1};
    std::vector<Dfao::State> states{{"q0/0", 0}, {"q1/1", 1}};
    const std::vector<std::size_t> transitions{
        // digit: 0  1
        0, 1,  // from q0
        1, 0,  // from q1
    };
    return Dfao(digits, std::move(states), 0, transitions);
}

std::vector<std::int8_t> binary_digits(std::uint64_t i) {
    std::vector<std::int8_t> digits;
    while (i != 0) {
        digits.push_back(static_cast<std::int8_t>(i & 1));
        i >>= 1;
    }
    return digits;
}

std::int8_t thue_morse_automatic(std::uint64_t i) {
    static const Dfao machine = thue_morse_dfao();
    const auto digits = binary_digits(i);
    return machine.run(digits);
}

}  // namespace sqfw
