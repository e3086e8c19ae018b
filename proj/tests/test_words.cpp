#include <doctest.h>

#include <random>

#include "sqfw/words.hpp"
#include "test_helpers.hpp"

using namespace sqfw;
using test::balanced;
using test::ternary;

TEST_CASE("words parse and render per alphabet") {
    CHECK(ternary("213123132").str() == "213123132");
    CHECK(balanced("-0+").str() == "-0+");
    CHECK(Word::parse(Alphabet::Binary, "0110").str() == "0110");
    CHECK(Word::parse(Alphabet::Counts012, "21020").str() == "21020");
    CHECK(ternary("").str() == "");
    CHECK(ternary("").empty());
}

TEST_CASE("words reject symbols outside the declared alphabet") {
    CHECK_THROWS_AS(Word::parse(Alphabet::Ternary123, "120"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(Alphabet::Binary, "012"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(Alphabet::Balanced, "1"), std::invalid_argument);
    CHECK_THROWS_AS(Word(Alphabet::Ternary123, {1, 4}), std::invalid_argument);
    Word w(Alphabet::Balanced);
    CHECK_THROWS_AS(w.push_back(2), std::invalid_argument);
}

TEST_CASE("relabeling maps ternary to balanced symbols") {
    CHECK(relabel_to_balanced(ternary("123")) == balanced("-0+"));
    CHECK(relabel_to_balanced(ternary("")) == balanced(""));
    // symbol-wise 1->-1, 2->0, 3->+1 on the level-2 word
    CHECK(relabel_to_balanced(ternary("213123132")) == balanced("0-+-0+-+0"));
}

TEST_CASE("relabeling round-trips both ways") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const Word w = test::random_ternary_word(rng, 40);
        CHECK(relabel_to_ternary(relabel_to_balanced(w)) == w);
    }
    const Word b = balanced("+0--0++");
    CHECK(relabel_to_balanced(relabel_to_ternary(b)) == b);
}

TEST_CASE("relabeling rejects the wrong input alphabet") {
    CHECK_THROWS_AS(relabel_to_balanced(balanced("-0+")), std::invalid_argument);
    CHECK_THROWS_AS(relabel_to_ternary(ternary("123")), std::invalid_argument);
}

TEST_CASE("two-sided windows expose logical indices around the center") {
    const TwoSidedWindow level1(ternary("123"), 1);
    CHECK(level1.at(0) == 2);
    CHECK(level1.at(-1) == 1);
    CHECK(level1.at(1) == 3);

    const TwoSidedWindow level2(ternary("213123132"), 4);
    CHECK(level2.at(4) == 2);
    CHECK(level2.at(-4) == 2);
    CHECK(level2.min_index() == -4);
    CHECK(level2.max_index() == 4);
}

TEST_CASE("window access agrees with direct positions on every small window") {
    const Word w = ternary("2131231");
    for (std::size_t center = 0; center < w.size(); ++center) {
        const TwoSidedWindow window(w, center);
        for (std::int64_t i = window.min_index(); i <= window.max_index(); ++i) {
            CHECK(window.at(i) == w[static_cast<std::size_t>(i + static_cast<std::int64_t>(center))]);
        }
    }
}

TEST_CASE("window range errors carry the valid interval") {
    const TwoSidedWindow window(ternary("123"), 1);
    CHECK_THROWS_WITH_AS(window.at(2), "index 2 outside window [-1, 1]", std::out_of_range);
    CHECK_THROWS_AS(window.at(-2), std::out_of_range);
    CHECK_THROWS_AS(TwoSidedWindow(ternary(""), 0), std::invalid_argument);
    CHECK_THROWS_AS(TwoSidedWindow(ternary("123"), 3), std::invalid_argument);
}

TEST_CASE("slice returns factors and validates bounds") {
    const Word w = ternary("213123132");
    CHECK(w.slice(3, 3) == ternary("123"));
    CHECK(w.slice(0, 0) == ternary(""));
    CHECK(w.slice(9, 0) == ternary(""));
    CHECK_THROWS_AS(w.slice(8, 2), std::out_of_range);
}
