#include <doctest.h>

#include <map>
#include <set>

#include "test_util.hpp"

using namespace delins;
using namespace delins::testing;

namespace {

std::map<std::string, unsigned long long> as_map(const WeightedBall& ball) {
    std::map<std::string, unsigned long long> m;
    for (const auto& e : ball.entries) m[e.word.str()] = static_cast<unsigned long long>(e.weight);
    return m;
}

}  // namespace

TEST_SUITE("balls") {

TEST_CASE("insertion ball of 00") {
    const WeightedBall ball = insertion_ball(make_word("00"), 1);
    CHECK(as_map(ball) == std::map<std::string, unsigned long long>{
                              {"000", 3}, {"001", 1}, {"010", 1}, {"100", 1}});
    CHECK(ball.entries.size() == 4);
    CHECK(ball.weight_total() == 6);  // C(3,1) * 2
    CHECK(ball.to_text() == "000\t3\n001\t1\n010\t1\n100\t1\n");
}

TEST_CASE("insertion ball size formula") {
    CHECK(insertion_ball_size(1, 2, 2) == 7);  // 1 + 3 + 3
    for (int q : {2, 3}) {
        for (int m = 0; m <= 7; ++m) {
            for (int k = 0; k <= 2; ++k) {
                const Word y = m == 0 ? Word({}, q) : balanced_word(q, m, std::min(m, 2), 0);
                CHECK(insertion_ball(y, k).entries.size() ==
                      static_cast<std::size_t>(insertion_ball_size(m, k, q)));
            }
        }
    }
}

TEST_CASE("deletion balls") {
    const WeightedBall ball = deletion_ball(make_word("010"), 1);
    CHECK(as_map(ball) == std::map<std::string, unsigned long long>{{"00", 1}, {"01", 1}, {"10", 1}});
    CHECK(ball.weight_total() == 3);

    CHECK(as_map(deletion_ball(make_word("000"), 1)) ==
          std::map<std::string, unsigned long long>{{"00", 3}});

    const WeightedBall boundary = deletion_ball(make_word("0101"), 4);
    CHECK(boundary.entries.size() == 1);
    CHECK(boundary.entries.front().word.empty());
    CHECK(boundary.entries.front().weight == 1);
    CHECK(boundary.to_text() == "\t1\n");

    CHECK_THROWS_AS(deletion_ball(make_word("01"), 3), std::invalid_argument);
}

TEST_CASE("k = 0 balls are the center alone") {
    const Word y = make_word("0102", 3);
    for (const WeightedBall& ball : {insertion_ball(y, 0), deletion_ball(y, 0)}) {
        CHECK(ball.entries.size() == 1);
        CHECK(ball.entries.front().word == y);
        CHECK(ball.entries.front().weight == 1);
    }
}

TEST_CASE("normalization identities hold exactly") {
    for (int q : {2, 3}) {
        for (int k = 1; k <= 2; ++k) {
            for (int m = 1; m <= 6; ++m) {
                const Weight ins_expected =
                    checked_mul(binomial(static_cast<unsigned>(m + k), static_cast<unsigned>(k)),
                                checked_pow(static_cast<Weight>(q), static_cast<unsigned>(k)));
                for_each_word(q, m, [&](const Word& w) {
                    CHECK(insertion_ball(w, k).weight_total() == ins_expected);
                    if (k <= m) {
                        CHECK(deletion_ball(w, k).weight_total() ==
                              binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
                    }
                });
            }
        }
    }
}

TEST_CASE("weights are computed per member, matching the oracle") {
    for_each_word(2, 5, [](const Word& y) {
        for (const auto& e : insertion_ball(y, 2).entries) {
            CHECK(e.weight == naive_embeddings(e.word.symbols(), y.symbols()));
        }
    });
}

TEST_CASE("complement relabeling preserves the weight multiset") {
    for_each_word(2, 6, [](const Word& y) {
        const WeightedBall a = insertion_ball(y, 2);
        const WeightedBall b = insertion_ball(complemented(y), 2);
        REQUIRE(a.entries.size() == b.entries.size());
        std::multiset<unsigned long long> wa, wb;
        for (const auto& e : a.entries) wa.insert(static_cast<unsigned long long>(e.weight));
        for (const auto& e : b.entries) wb.insert(static_cast<unsigned long long>(e.weight));
        CHECK(wa == wb);
        // the relabeled entries are exactly the complements
        for (const auto& e : a.entries) {
            CHECK(naive_embeddings(complemented(e.word).symbols(), complemented(y).symbols()) ==
                  e.weight);
        }
    });
}

TEST_CASE("ball size cap fails loudly") {
    Limits tight;
    tight.max_ball = 4;
    CHECK_THROWS_AS(insertion_ball(make_word("0011"), 2, tight), std::runtime_error);
    CHECK_THROWS_AS(deletion_ball(make_word("00110101"), 4, tight), std::runtime_error);
}

TEST_CASE("two-run insertions") {
    {
        const auto [x, w] = two_run_insertion_embedding(make_word("0110"), 1);
        CHECK(x.str() == "010110");
        CHECK(w == 4);
    }
    {
        const auto [x, w] = two_run_insertion_embedding(make_word("0"), 0);
        CHECK(x.str() == "010");
        CHECK(w == 2);
    }
    {
        const auto [x, w] = two_run_insertion_embedding(make_word("0000"), 1);
        CHECK(x.str() == "000010");
        CHECK(w == 5);
    }
    CHECK_THROWS_AS(two_run_insertion_embedding(make_word("012", 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(two_run_insertion_embedding(make_word("01"), 5), std::invalid_argument);
}

TEST_CASE("two-run insertion formula equals the DP for all binary words up to length 10") {
    for (int m = 1; m <= 10; ++m) {
        for_each_word(2, m, [](const Word& y) {
            const int R = run_profile(y).runs();
            for (int i = 0; i <= R; ++i) {
                const auto [x, w] = two_run_insertion_embedding(y, i);
                CHECK(run_profile(x).runs() == R + 2);
                CHECK(embedding_number(x, y) == w);
            }
        });
    }
}

TEST_CASE("distinguished supersequences") {
    {
        const SpecialSupersequences s = special_supersequences(make_word("001"));
        CHECK(s.beta.str() == "01001");
        CHECK(s.beta_weight == 3);
        CHECK(s.gamma.str() == "11001");
        CHECK(s.gamma_weight == 1);
        CHECK(s.delta.str() == "10001");
        CHECK(s.delta_weight == 3);
    }
    {
        // constant word: the beta weight is maximal, m + 1
        const SpecialSupersequences s = special_supersequences(make_word("11111"));
        CHECK(s.beta_weight == 6);
    }
    {
        // alternating word: the delta weight is minimal, 2
        const SpecialSupersequences s = special_supersequences(make_word("010101"));
        CHECK(s.delta_weight == 2);
    }
    CHECK_THROWS_AS(special_supersequences(make_word("01", 3)), std::invalid_argument);
}

TEST_CASE("distinguished supersequence weights equal the DP for all binary words up to length 10") {
    for (int m = 1; m <= 10; ++m) {
        for_each_word(2, m, [](const Word& y) {
            const SpecialSupersequences s = special_supersequences(y);
            CHECK(embedding_number(s.beta, y) == s.beta_weight);
            CHECK(embedding_number(s.gamma, y) == s.gamma_weight);
            CHECK(embedding_number(s.delta, y) == s.delta_weight);
        });
    }
}

}  // TEST_SUITE
