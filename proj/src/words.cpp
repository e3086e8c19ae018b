#include "sqfw/words.hpp"

#include <array>
#include <ostream>
#include <utility>

namespace sqfw {

namespace {

struct AlphabetInfo {
    std::string_view name;
    std::array<std::int8_t, 3> symbols;
    std::size_t count;
};

const AlphabetInfo& info(Alphabet a) {
    static const std::array<AlphabetInfo, 4> table = {{
        {"ternary123", {1, 2, 3}, 3},
        {"balanced", {-1, 0, 1}, 3},
        {"binary", {0, 1, 0}, 2},
        {"counts012", {0, 1, 2}, 3},
    }};
    return table[static_cast<std::size_t>(a)];
}

char symbol_char(Alphabet a, std::int8_t s) {
    if (a == Alphabet::Balanced) {
        return s < 0 ? '-' : (s == 0 ? '0' : '+');
    }
    return static_cast<char>('0' + s);
}

std::int8_t char_symbol(Alphabet a, char c) {
    if (a == Alphabet::Balanced) {
        switch (c) {
            case '-': return -1;
            case '0': return 0;
            case '+': return 1;
            default: break;
        }
    } else if (c >= '0' && c <= '9' && alphabet_contains(a, static_cast<std::int8_t>(c - '0'))) {
        return static_cast<std::int8_t>(c - '0');
    }
    throw std::invalid_argument("character '" + std::string(1, c) + "' is not a symbol of alphabet " +
                                std::string(alphabet_name(a)));
}

}  // namespace

std::string_view alphabet_name(Alphabet a) { return info(a).name; }

bool alphabet_contains(Alphabet a, std::int8_t symbol) {
    const AlphabetInfo& in = info(a);
    for (std::size_t k = 0; k < in.count; ++k) {
        if (in.symbols[k] == symbol) return true;
    }
    return false;
}

Word::Word(Alphabet alphabet, std::vector<std::int8_t> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
    for (std::int8_t s : symbols_) {
        if (!alphabet_contains(alphabet_, s)) {
            throw std::invalid_argument("symbol " + std::to_string(static_cast<int>(s)) +
                                        " is not in alphabet " + std::string(alphabet_name(alphabet_)));
        }
    }
}

Word Word::parse(Alphabet alphabet, std::string_view text) {
    std::vector<std::int8_t> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(char_symbol(alphabet, c));
    return Word(alphabet, std::move(symbols));
}

void Word::push_back(std::int8_t symbol) {
    if (!alphabet_contains(alphabet_, symbol)) {
        throw std::invalid_argument("symbol " + std::to_string(static_cast<int>(symbol)) +
                                    " is not in alphabet " + std::string(alphabet_name(alphabet_)));
    }
    symbols_.push_back(symbol);
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) {
        throw std::out_of_range("slice [" + std::to_string(pos) + ", " + std::to_string(pos + len) +
                                ") exceeds word length " + std::to_string(size()));
    }
    return Word(alphabet_, std::vector<std::int8_t>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (std::int8_t s : symbols_) out.push_back(symbol_char(alphabet_, s));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

namespace {

Word relabel(const Word& w, Alphabet from, Alphabet to, std::int8_t delta, const char* op) {
    if (w.alphabet() != from) {
        throw std::invalid_argument(std::string(op) + " expects a " + std::string(alphabet_name(from)) +
                                    " word, got " + std::string(alphabet_name(w.alphabet())));
    }
    std::vector<std::int8_t> out;
    out.reserve(w.size());
    for (std::int8_t s : w.symbols()) out.push_back(static_cast<std::int8_t>(s + delta));
    return Word(to, std::move(out));
}

}  // namespace

Word relabel_to_balanced(const Word& w) {
    return relabel(w, Alphabet::Ternary123, Alphabet::Balanced, -2, "relabel_to_balanced");
}

Word relabel_to_ternary(const Word& w) {
    return relabel(w, Alphabet::Balanced, Alphabet::Ternary123, +2, "relabel_to_ternary");
}

TwoSidedWindow::TwoSidedWindow(Word word, std::size_t center_offset)
    : word_(std::move(word)), center_offset_(center_offset) {
    if (word_.empty()) {
        throw std::invalid_argument("a two-sided window requires a nonempty word");
    }
    if (center_offset_ >= word_.size()) {
        throw std::invalid_argument("center offset " + std::to_string(center_offset_) +
                                    " exceeds word length " + std::to_string(word_.size()));
    }
}

std::int64_t TwoSidedWindow::min_index() const noexcept {
    return -static_cast<std::int64_t>(center_offset_);
}

std::int64_t TwoSidedWindow::max_index() const noexcept {
    return static_cast<std::int64_t>(word_.size() - 1 - center_offset_);
}

std::int8_t TwoSidedWindow::at(std::int64_t i) const {
    if (i < min_index() || i > max_index()) {
        throw std::out_of_range("index " + std::to_string(i) + " outside window [" +
                                std::to_string(min_index()) + ", " + std::to_string(max_index()) + "]");
    }
    return word_[static_cast<std::size_t>(i + static_cast<std::int64_t>(center_offset_))];
}

}  // namespace sqfw
