#include <doctest.h>

#include <chrono>
#include <random>

#include "sqfw/morphism.hpp"
#include "sqfw/reference_sequences.hpp"
#include "sqfw/repetition.hpp"
#include "test_helpers.hpp"

using namespace sqfw;
using test::ternary;

TEST_CASE("witness validation checks the factor equality") {
    const Word w = ternary("1212");
    CHECK(witness_valid(w, {0, 2}));
    CHECK(witness_valid(w, {1, 1}) == false);
    CHECK(witness_valid(w, {0, 3}) == false);  // does not fit
    CHECK(witness_valid(w, {0, 0}) == false);  // empty half
}

TEST_CASE("the naive oracle returns the first square, positions then lengths") {
    CHECK(find_square_naive(ternary("11")) == SquareWitness{0, 1});
    CHECK(find_square_naive(ternary("123")) == std::nullopt);
    // hand-audited: no position carries a square of any half-length
    CHECK(find_square_naive(ternary("121321232")) == std::nullopt);
    // at p=0 the half-lengths 1..3 fail before 4 matches
    CHECK(find_square_naive(ternary("21232123")) == SquareWitness{0, 4});
    // positions 0 and 1 are square-free, position 2 starts "11"
    CHECK(find_square_naive(ternary("1211")) == SquareWitness{2, 1});
}

TEST_CASE("empty and single-symbol words hold no square") {
    CHECK(find_square_naive(ternary("")) == std::nullopt);
    CHECK(find_square(ternary("")) == std::nullopt);
    CHECK(find_square_naive(ternary("3")) == std::nullopt);
    CHECK(find_square(ternary("3")) == std::nullopt);
    CHECK(find_square(ternary("11")) == SquareWitness{0, 1});
}

TEST_CASE("expanded words are square-free; a Thue-Morse prefix is not") {
    CHECK(is_squarefree(squarefree_word(3)));
    CHECK(is_squarefree(squarefree_word(9)));

    const Word tm = thue_morse_iterate(4);
    CHECK(tm.str() == "0110100110010110");
    CHECK_FALSE(is_squarefree(tm));
    const auto witness = find_square(tm);
    REQUIRE(witness.has_value());
    CHECK(witness_valid(tm, *witness));
}

TEST_CASE("boundary square scan caps the half-length") {
    CHECK(check_boundary_squares(ternary("1221"), 2) == SquareWitness{1, 1});
    CHECK(check_boundary_squares(ternary("1212"), 2) == SquareWitness{0, 2});
    CHECK(check_boundary_squares(squarefree_word(4), 2) == std::nullopt);
    // caps at the requested half-length even when longer squares exist
    CHECK(check_boundary_squares(ternary("123123"), 2) == std::nullopt);
    CHECK(check_boundary_squares(ternary("123123"), 3) == SquareWitness{0, 3});
}

TEST_CASE("detectors agree on random words and their witnesses validate") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 2000; ++round) {
        const Word w = test::random_ternary_word(rng, 64);
        const auto naive = find_square_naive(w);
        const auto fast = find_square(w);
        REQUIRE(naive.has_value() == fast.has_value());
        if (naive) REQUIRE(witness_valid(w, *naive));
        if (fast) REQUIRE(witness_valid(w, *fast));
    }
    for (int round = 0; round < 200; ++round) {
        const Word w = test::random_ternary_word(rng, 512);
        const auto naive = find_square_naive(w);
        const auto fast = find_square(w);
        REQUIRE(naive.has_value() == fast.has_value());
        if (fast) REQUIRE(witness_valid(w, *fast));
    }
}

TEST_CASE("detectors agree on near-square-free words with one planted flip") {
    // mutated expansions: mostly square-free texture, occasional squares
    std::mt19937_64 rng(43);
    for (int round = 0; round < 300; ++round) {
        const Word base = squarefree_word(5);
        std::vector<std::int8_t> symbols(base.symbols().begin(), base.symbols().end());
        const std::size_t pos = rng() % symbols.size();
        symbols[pos] = static_cast<std::int8_t>(symbols[pos] % 3 + 1);
        const Word w(Alphabet::Ternary123, std::move(symbols));
        const auto naive = find_square_naive(w);
        const auto fast = find_square(w);
        REQUIRE(naive.has_value() == fast.has_value());
        if (naive) REQUIRE(witness_valid(w, *naive));
        if (fast) REQUIRE(witness_valid(w, *fast));
    }
}

TEST_CASE("factors of a square-free word are square-free") {
    const Word w = squarefree_word(6);
    std::mt19937_64 rng(47);
    for (int round = 0; round < 50; ++round) {
        const std::size_t pos = rng() % w.size();
        const std::size_t len = rng() % (w.size() - pos);
        CHECK(is_squarefree(w.slice(pos, len)));
    }
}

TEST_CASE("an aligned square in an expanded shape survives center extraction") {
    // plant a 3-aligned square ww with |w| divisible by 3: center extraction
    // must expose the square at one third of the size
    const Word base = squarefree_word(5);
    std::vector<std::int8_t> symbols(base.symbols().begin(), base.symbols().end());
    const std::size_t start = 27;        // aligned block boundary
    const std::size_t half = 27;         // half-length divisible by 3
    for (std::size_t k = 0; k < half; ++k) symbols[start + half + k] = symbols[start + k];
    const Word planted(Alphabet::Ternary123, std::move(symbols));
    REQUIRE(witness_valid(planted, {start, half}));

    const Word extracted = center_extract(planted);
    CHECK(witness_valid(extracted, {start / 3, half / 3}));
    const auto found = find_square(extracted);
    REQUIRE(found.has_value());
    CHECK(witness_valid(extracted, *found));
}

TEST_CASE("the fast detector stays fast on large square-free input") {
    const Word w = squarefree_word(11);  // 177147 symbols
    const auto start = std::chrono::steady_clock::now();
    CHECK(is_squarefree(w));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    CHECK(ms < 1000.0);  // quadratic scans would take far longer
}
