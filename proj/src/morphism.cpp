#include "sqfw/morphism.hpp"

#include <array>
#include <utility>

namespace sqfw {

namespace {

void require_ternary(const Word& w, const char* op) {
    if (w.alphabet() != Alphabet::Ternary123) {
        throw std::invalid_argument(std::string(op) + " expects a ternary123 word, got " +
                                    std::string(alphabet_name(w.alphabet())));
    }
}

// index by symbol value 1..3
constexpr std::array<std::int8_t, 4> kSwap12{0, 2, 1, 3};
constexpr std::array<std::int8_t, 4> kSwap23{0, 1, 3, 2};

void append_mapped(std::vector<std::int8_t>& out, const Word& w, const std::array<std::int8_t, 4>& map) {
    for (std::int8_t s : w.symbols()) out.push_back(map[static_cast<std::size_t>(s)]);
}

Word apply_swap(const Word& w, const std::array<std::int8_t, 4>& map, const char* op) {
    require_ternary(w, op);
    std::vector<std::int8_t> out;
    out.reserve(w.size());
    append_mapped(out, w, map);
    return Word(Alphabet::Ternary123, std::move(out));
}

}  // namespace

Word swap12(const Word& w) { return apply_swap(w, kSwap12, "swap12"); }

Word swap23(const Word& w) { return apply_swap(w, kSwap23, "swap23"); }

Word expand(const Word& w) {
    require_ternary(w, "expand");
    std::vector<std::int8_t> out;
    out.reserve(3 * w.size());
    append_mapped(out, w, kSwap12);
    out.insert(out.end(), w.symbols().begin(), w.symbols().end());
    append_mapped(out, w, kSwap23);
    return Word(Alphabet::Ternary123, std::move(out));
}

Word expand_iterate(const Word& seed, unsigned n, unsigned max_depth) {
    require_ternary(seed, "expand_iterate");
    if (n > max_depth) {
        throw ResourceLimitError("expansion depth " + std::to_string(n) + " exceeds the configured cap " +
                                 std::to_string(max_depth));
    }
    Word w = seed;
    for (unsigned step = 0; step < n; ++step) w = expand(w);
    return w;
}

Word squarefree_word(unsigned n, unsigned max_depth) {
    return expand_iterate(Word::parse(Alphabet::Ternary123, "2"), n, max_depth);
}

Word center_extract(const Word& w) {
    require_ternary(w, "center_extract");
    if (w.size() % 3 != 0) {
        throw std::invalid_argument("center_extract requires a length divisible by 3, got " +
                                    std::to_string(w.size()));
    }
    std::vector<std::int8_t> out;
    out.reserve(w.size() / 3);
    for (std::size_t block = 0; block * 3 < w.size(); ++block) {
        out.push_back(w[3 * block + 1]);
    }
    return Word(Alphabet::Ternary123, std::move(out));
}

TwoSidedWindow squarefree_window(unsigned n, unsigned max_depth) {
    Word w = squarefree_word(n, max_depth);
    const std::size_t center = (w.size() - 1) / 2;
    return TwoSidedWindow(std::move(w), center);
}

}  // namespace sqfw
