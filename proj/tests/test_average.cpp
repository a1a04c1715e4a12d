#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "test_util.hpp"

using namespace delins;
using namespace delins::testing;

TEST_SUITE("average") {

TEST_CASE("run counts match a brute-force census") {
    CHECK(run_count(3, 1, 2) == 10);
    CHECK(run_count(3, 2, 2) == 4);
    CHECK(run_count(3, 3, 2) == 2);  // the uncorrected closed form gives 3/2 here
    CHECK(run_count_literal(3, 3, 2) == doctest::Approx(1.5));
    CHECK(run_count_literal(3, 1, 2) == doctest::Approx(10.0));
    CHECK_THROWS_AS(run_count(3, 4, 2), std::invalid_argument);

    for (int q : {2, 3}) {
        for (int m = 1; m <= 8; ++m) {
            std::vector<std::uint64_t> census(static_cast<std::size_t>(m) + 1, 0);
            for_each_word(q, m, [&](const Word& w) {
                for (int len : run_profile(w).lengths) census[static_cast<std::size_t>(len)] += 1;
            });
            for (int r = 1; r <= m; ++r) {
                CHECK(run_count(m, r, q) == census[static_cast<std::size_t>(r)]);
            }
        }
    }
}

TEST_CASE("every position lies in exactly one run") {
    for (int q : {2, 3}) {
        for (int m = 1; m <= 10; ++m) {
            Weight total = 0;
            for (int r = 1; r <= m; ++r) {
                total = checked_add(total, checked_mul(static_cast<Weight>(run_count(m, r, q)),
                                                       static_cast<Weight>(r)));
            }
            CHECK(total == checked_mul(static_cast<Weight>(m),
                                       checked_pow(static_cast<Weight>(q), static_cast<unsigned>(m))));
        }
    }
}

TEST_CASE("single-deletion averages") {
    const AverageReport two = avg_1del(2, 2);
    CHECK(two.avg_closed == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(*two.avg_direct == doctest::Approx(1.5).epsilon(1e-12));

    const AverageReport three = avg_1del(3, 2);
    CHECK(three.avg_closed == doctest::Approx(1.8553885422075336).epsilon(1e-12));
    CHECK(three.avg_closed == doctest::Approx(*three.avg_direct).epsilon(1e-9));

    for (int q : {2, 3}) {
        for (int n = 2; n <= 9; ++n) {
            const AverageReport r = avg_1del(n, q);
            REQUIRE(r.avg_direct.has_value());
            CHECK(r.avg_closed == doctest::Approx(*r.avg_direct).epsilon(1e-9));
            CHECK(r.min_bits <= *r.avg_direct + 1e-12);
            CHECK(*r.avg_direct <= r.max_bits + 1e-12);
            CHECK(r.lower_bound <= *r.avg_direct + 1e-12);
        }
    }
}

TEST_CASE("single-insertion averages") {
    const AverageReport three = avg_1ins(3, 2);
    CHECK(three.avg_closed == doctest::Approx(1.1403195311147831).epsilon(1e-12));
    CHECK(three.avg_closed == doctest::Approx(*three.avg_direct).epsilon(1e-9));

    for (int q : {2, 3}) {
        for (int n = 2; n <= 8; ++n) {
            const AverageReport r = avg_1ins(n, q);
            REQUIRE(r.avg_direct.has_value());
            CHECK(r.avg_closed == doctest::Approx(*r.avg_direct).epsilon(1e-9));
            CHECK(r.lower_bound <= *r.avg_direct + 1e-12);
            CHECK(*r.avg_direct <= r.max_bits + 1e-12);
            // the constant output contributes zero, so the average sits strictly below the maximum
            CHECK(*r.avg_direct < r.max_bits);
        }
    }
}

TEST_CASE("direct expectation is omitted above the cap") {
    Limits tight;
    tight.max_space = 8;
    const AverageReport r = avg_1del(6, 2, true, tight);
    CHECK_FALSE(r.avg_direct.has_value());
    CHECK(r.avg_closed > 0.0);
    const AverageReport skipped = avg_1del(3, 2, false);
    CHECK_FALSE(skipped.avg_direct.has_value());
}

TEST_CASE("analytic lower bounds") {
    const LowerBounds lb4 = avg_lower_bounds(4, 2);
    CHECK(lb4.del_lb == doctest::Approx(1.9375).epsilon(1e-12));
    CHECK(lb4.del_lb <= *avg_1del(4, 2).avg_direct + 1e-12);
    CHECK(lb4.ins_lb <= *avg_1ins(4, 2).avg_direct + 1e-12);

    // the uncorrected analytic form matches its own uncorrected sum ...
    for (int q : {2, 3}) {
        for (int n = 2; n <= 12; ++n) {
            double sum = 0.0;
            const int m = n - 1;
            for (int r = 1; r <= m; ++r) {
                sum += run_count_literal(m, r, q) * (r + 1) * r;
            }
            double qn = 1.0;
            for (int i = 0; i < n; ++i) qn *= q;
            const double expected = std::log2(static_cast<double>(n) * q) - sum / (n * qn);
            CHECK(avg_1del_lower_bound_literal(n, q) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
    // ... but overshoots the true average at n = 2, which is why the
    // reported bound uses the corrected census
    CHECK(avg_1del_lower_bound_literal(2, 2) == doctest::Approx(1.625).epsilon(1e-12));
    CHECK(avg_1del_lower_bound_literal(2, 2) > *avg_1del(2, 2).avg_direct);
    CHECK(avg_lower_bounds(2, 2).del_lb <= *avg_1del(2, 2).avg_direct + 1e-12);

    for (int q : {2, 3}) {
        for (int n = 2; n <= 60; ++n) {
            CHECK(avg_lower_bounds(n, q).del_lb <= std::log2(static_cast<double>(n) * q));
        }
    }
}

TEST_CASE("figure table") {
    const std::vector<FigureRow> rows = figure_table(2, 100, 2);
    REQUIRE(rows.size() == 99);
    const FigureRow& r4 = rows[2];
    CHECK(r4.n == 4);
    CHECK(r4.min == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r4.max == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(r4.avg == doctest::Approx(2.140319531114783).epsilon(1e-12));
    CHECK(r4.lower_bound == doctest::Approx(1.9375).epsilon(1e-12));

    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].lower_bound <= rows[i].avg + 1e-12);
        CHECK(rows[i].avg <= rows[i].max + 1e-12);
        CHECK(rows[i].min <= rows[i].avg + 1e-12);
        if (rows[i].n >= 5) {
            CHECK(rows[i].min > rows[i - 1].min);
            CHECK(rows[i].max > rows[i - 1].max);
            CHECK(rows[i].avg > rows[i - 1].avg);
            CHECK(rows[i].lower_bound > rows[i - 1].lower_bound);
        }
    }
    CHECK_THROWS_AS(figure_table(1, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(figure_table(5, 3, 2), std::invalid_argument);
}

TEST_CASE("figure CSV format") {
    const std::string csv = figure_csv(figure_table(2, 4, 2));
    CHECK(csv ==
          "n,min,max,avg,avg_lower_bound\n"
          "2,1.5,1.5,1.5,1.5\n"
          "3,1.79248125036,1.91829583405,1.85538854221,1.75162916739\n"
          "4,2,2.25,2.14031953111,1.9375\n");
}

TEST_CASE("average report serialization is stable") {
    CHECK(avg_1del(2, 2).to_json() ==
          "{\"n\":2,\"q\":2,\"direction\":\"del\",\"avg_closed\":1.5,\"avg_direct\":1.5,"
          "\"lower_bound\":1.5,\"min\":1.5,\"max\":1.5}");
    CHECK(avg_1del(3, 2, false).to_json().find("\"avg_direct\":null") != std::string::npos);
}

}  // TEST_SUITE
