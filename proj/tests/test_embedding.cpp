#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace delins;
using namespace delins::testing;

TEST_SUITE("embedding") {

TEST_CASE("embedding numbers") {
    CHECK(embedding_number(make_word("11220", 3), make_word("120", 3)) == 4);
    CHECK(embedding_number(make_word("0101"), make_word("0101")) == 1);
    CHECK(embedding_number(make_word("0000"), make_word("00")) == 6);
    CHECK(embedding_number(make_word("111"), make_word("0")) == 0);
    CHECK_THROWS_AS(embedding_number(make_word("01"), make_word("010")), std::invalid_argument);
    CHECK_THROWS_AS(embedding_number(make_word("012", 3), make_word("01")), std::invalid_argument);
}

TEST_CASE("embedding DP agrees with the recursive oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<Symbol> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(m));
        for (auto& s : xs) s = static_cast<Symbol>(rng() % 3);
        for (auto& s : ys) s = static_cast<Symbol>(rng() % 3);
        const Word x(xs, 3), y(ys, 3);
        CHECK(embedding_number(x, y) == naive_embeddings(x.symbols(), y.symbols()));
    }
}

TEST_CASE("first-symbol recursion") {
    // omega_y(x) = [y1 == x1] * omega_{y[2:]}(x[2:]) + omega_y(x[2:])
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        std::vector<Symbol> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(m));
        for (auto& s : xs) s = static_cast<Symbol>(rng() % 2);
        for (auto& s : ys) s = static_cast<Symbol>(rng() % 2);
        Weight rhs = embedding_count(std::span(xs).subspan(1), ys);
        if (xs[0] == ys[0]) {
            rhs = checked_add(rhs, embedding_count(std::span(xs).subspan(1), std::span(ys).subspan(1)));
        }
        CHECK(embedding_count(xs, ys) == rhs);
    }
}

TEST_CASE("prepend recursion examples") {
    {
        const auto [lhs, rhs] = prepend_recursion_check(make_word("010"), make_word("0"), 0);
        CHECK(lhs == 3);
        CHECK(rhs == 3);
    }
    {
        const auto [lhs, rhs] = prepend_recursion_check(make_word("01"), make_word("01"), 1);
        CHECK(lhs == 1);
        CHECK(rhs == 1);
    }
    {
        const auto [lhs, rhs] = prepend_recursion_check(make_word("111"), make_word("1"), 0);
        CHECK(lhs == 3);
        CHECK(rhs == 3);
    }
}

TEST_CASE("prepend recursion holds for 1000 random cases") {
    std::mt19937 rng(20240917);
    int done = 0;
    while (done < 1000) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int k = static_cast<int>(rng() % 4);
        const int m = n - k;
        if (m < 0) continue;
        std::vector<Symbol> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(m));
        for (auto& s : xs) s = static_cast<Symbol>(rng() % 2);
        for (auto& s : ys) s = static_cast<Symbol>(rng() % 2);
        const Symbol alpha = static_cast<Symbol>(rng() % 2);
        const auto [lhs, rhs] = prepend_recursion_check(Word(xs, 2), Word(ys, 2), alpha);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("weight overflow is an error, never a wraparound") {
    // C(140,70) does not fit 128 bits
    const Word x(std::vector<Symbol>(140, 0), 2);
    const Word y(std::vector<Symbol>(70, 0), 2);
    CHECK_THROWS_AS(embedding_number(x, y), std::overflow_error);
    // C(120,60) does
    const Word x2(std::vector<Symbol>(120, 0), 2);
    const Word y2(std::vector<Symbol>(60, 0), 2);
    CHECK(embedding_number(x2, y2) == binomial(120, 60));
}

TEST_CASE("checked integer helpers") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(checked_pow(3, 4) == 81);
    CHECK(weight_str(binomial(100, 50)) == "100891344545564193334812497256");
    CHECK_THROWS_AS(binomial(140, 70), std::overflow_error);
}

}  // TEST_SUITE
