#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqfw {

/// Thrown when a request exceeds a configured depth or size cap
/// (see SQFW_MAX_DEPTH in the CLI).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The closed symbol alphabets used throughout the library. Symbols are
/// stored by numeric value and validated against the declared alphabet;
/// arbitrary character sets are deliberately not supported.
enum class Alphabet : std::uint8_t {
    Ternary123,  ///< {1, 2, 3}
    Balanced,    ///< {-1, 0, +1}
    Binary,      ///< {0, 1}
    Counts012,   ///< {0, 1, 2}
};

std::string_view alphabet_name(Alphabet a);
bool alphabet_contains(Alphabet a, std::int8_t symbol);

/// A finite word over one declared alphabet; the universal currency of the
/// library. Immutable in practice: all operations return new words.
///
/// Textual form (str/parse): one character per symbol. Ternary123 words
/// render as digit strings ("213123132"), Balanced words as "-0+" strings,
/// Binary as "0110", Counts012 as "210...". The empty word renders as "".
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
    Word(Alphabet alphabet, std::vector<std::int8_t> symbols);

    static Word parse(Alphabet alphabet, std::string_view text);

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    /// Unchecked positional access, 0-based.
    std::int8_t operator[](std::size_t pos) const noexcept { return symbols_[pos]; }

    std::span<const std::int8_t> symbols() const noexcept { return symbols_; }

    void reserve(std::size_t n) { symbols_.reserve(n); }
    void push_back(std::int8_t symbol);

    /// The factor of length `len` starting at `pos`. Throws std::out_of_range
    /// if the slice does not fit.
    Word slice(std::size_t pos, std::size_t len) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    Alphabet alphabet_;
    std::vector<std::int8_t> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Symbol-wise relabeling 1 -> -1, 2 -> 0, 3 -> +1 (and back). Both maps are
/// bijective and inverse to each other; the input alphabet is enforced.
Word relabel_to_balanced(const Word& w);
Word relabel_to_ternary(const Word& w);

/// A word together with a declared center, modeling a finite window of a
/// two-sided infinite sequence. Logical index 0 sits at `center_offset`;
/// valid logical indices run from -center_offset to size-1-center_offset.
class TwoSidedWindow {
public:
    TwoSidedWindow(Word word, std::size_t center_offset);

    std::int64_t min_index() const noexcept;
    std::int64_t max_index() const noexcept;

    /// Symbol at logical index i. Throws std::out_of_range with the valid
    /// interval in the message.
    std::int8_t at(std::int64_t i) const;

    const Word& word() const noexcept { return word_; }
    std::size_t center_offset() const noexcept { return center_offset_; }

private:
    Word word_;
    std::size_t center_offset_;
};

}  // namespace sqfw
