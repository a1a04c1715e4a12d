#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include <delins/delins.hpp>

namespace delins::verify {

namespace {

constexpr int kGridAlphabets[] = {2, 3};

struct Recorder {
    SuiteResult result;

    void record(bool ok, const std::string& context) {
        ++result.cases;
        if (!ok) {
            ++result.failures;
            if (result.first_counterexample.empty()) result.first_counterexample = context;
        }
    }
};

std::vector<Word> sorted_witnesses(std::vector<Word> w) {
    std::sort(w.begin(), w.end());
    return w;
}

SuiteResult suite_normalization(int max_m, const Limits& limits) {
    Recorder rec;
    rec.result.name = "normalization";
    for (int q : kGridAlphabets) {
        for (int k = 1; k <= 2; ++k) {
            for (int m = 1; m <= max_m; ++m) {
                const Weight ins_expected =
                    checked_mul(binomial(static_cast<unsigned>(m + k), static_cast<unsigned>(k)),
                                checked_pow(static_cast<Weight>(q), static_cast<unsigned>(k)));
                const Weight del_expected = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
                for_each_word(q, m, [&](const Word& w) {
                    rec.record(insertion_ball(w, k, limits).weight_total() == ins_expected,
                               "insertion q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                   " y=" + w.str());
                    if (k <= m) {
                        rec.record(deletion_ball(w, k, limits).weight_total() == del_expected,
                                   "deletion q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                       " x=" + w.str());
                    }
                }, limits);
            }
        }
    }
    return rec.result;
}

SuiteResult suite_duality(int max_m, const Limits& limits) {
    Recorder rec;
    rec.result.name = "duality";
    for (int q : kGridAlphabets) {
        for (int k = 1; k <= 2; ++k) {
            for (int m = 1; m <= max_m; ++m) {
                for_each_word(q, m, [&](const Word& y) {
                    auto [a, b] = duality_check(y, k, Direction::deletion, limits);
                    rec.record(std::fabs(a - b) <= 1e-12, "del-pair q=" + std::to_string(q) +
                                                              " k=" + std::to_string(k) + " y=" + y.str());
                    if (m > k) {
                        auto [c, d] = duality_check(y, k, Direction::insertion, limits);
                        rec.record(std::fabs(c - d) <= 1e-12,
                                   "ins-pair q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                       " y=" + y.str());
                    }
                }, limits);
            }
        }
    }
    return rec.result;
}

SuiteResult suite_extremal(int max_m, const Limits& limits) {
    Recorder rec;
    rec.result.name = "extremal";
    const auto same_set = [](const ExtremalResult& a, const ExtremalResult& b) {
        return sorted_witnesses(a.witnesses) == sorted_witnesses(b.witnesses);
    };

    for (int q : kGridAlphabets) {
        for (int m = 1; m <= max_m; ++m) {
            for (int R = 1; R <= m; ++R) {
                const std::string ctx = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                        " R=" + std::to_string(R);
                {
                    const ChannelSpec spec{Direction::deletion, 1, q, m + 1};
                    auto [lo, hi] = exhaustive_extremizers(spec, R, limits);
                    const ExtremalResult clo = min_1del_fixed_runs(q, m, R, limits);
                    const ExtremalResult chi = max_1del_fixed_runs(q, m, R, limits);
                    rec.record(std::fabs(lo.bits - clo.bits) <= 1e-9 && same_set(lo, clo),
                               "1-del min " + ctx);
                    rec.record(std::fabs(hi.bits - chi.bits) <= 1e-9 && same_set(hi, chi),
                               "1-del max " + ctx);
                }
                {
                    const ChannelSpec spec{Direction::insertion, 1, q, m - 1};
                    if (m >= 2) {
                        auto [lo, hi] = exhaustive_extremizers(spec, R, limits);
                        auto [clo, chi] = extrema_1ins_fixed_runs(q, m, R, limits);
                        rec.record(std::fabs(lo.bits - clo.bits) <= 1e-9 && same_set(lo, clo),
                                   "1-ins min " + ctx);
                        rec.record(std::fabs(hi.bits - chi.bits) <= 1e-9 && same_set(hi, chi),
                                   "1-ins max " + ctx);
                    }
                }
            }
        }
        for (int n = 2; n <= max_m + 1; ++n) {
            const std::string ctx = "q=" + std::to_string(q) + " n=" + std::to_string(n);
            auto [glo, ghi] = global_extrema_1del(q, n, limits);
            auto [xlo, xhi] = exhaustive_extremizers(ChannelSpec{Direction::deletion, 1, q, n},
                                                     std::nullopt, limits);
            rec.record(std::fabs(glo.bits - xlo.bits) <= 1e-9 && same_set(glo, xlo), "global 1-del min " + ctx);
            rec.record(std::fabs(ghi.bits - xhi.bits) <= 1e-9 && same_set(ghi, xhi), "global 1-del max " + ctx);

            auto [ilo, ihi] = global_extrema_1ins(q, n, limits);
            auto [ylo, yhi] = exhaustive_extremizers(ChannelSpec{Direction::insertion, 1, q, n},
                                                     std::nullopt, limits);
            rec.record(std::fabs(ilo.bits - ylo.bits) <= 1e-9 && same_set(ilo, ylo), "global 1-ins min " + ctx);
            rec.record(std::fabs(ihi.bits - yhi.bits) <= 1e-9 && same_set(ihi, yhi), "global 1-ins max " + ctx);
        }
    }
    for (int m = 2; m <= max_m; ++m) {
        const ExtremalResult closed = min_2del(m, limits);
        auto [lo, hi] = exhaustive_extremizers(ChannelSpec{Direction::deletion, 2, 2, m + 2},
                                               std::nullopt, limits);
        (void)hi;
        rec.record(std::fabs(lo.bits - closed.bits) <= 1e-9 && sorted_witnesses(lo.witnesses) ==
                                                                   sorted_witnesses(closed.witnesses),
                   "2-del min m=" + std::to_string(m));
    }
    return rec.result;
}

SuiteResult suite_average(int max_m, const Limits& limits) {
    Recorder rec;
    rec.result.name = "average";
    for (int q : kGridAlphabets) {
        for (int m = 1; m <= max_m; ++m) {
            std::vector<std::uint64_t> census(static_cast<std::size_t>(m) + 1, 0);
            for_each_word(q, m, [&](const Word& w) {
                for (int len : run_profile(w).lengths) census[static_cast<std::size_t>(len)] += 1;
            }, limits);
            for (int r = 1; r <= m; ++r) {
                rec.record(census[static_cast<std::size_t>(r)] == run_count(m, r, q),
                           "census q=" + std::to_string(q) + " m=" + std::to_string(m) +
                               " r=" + std::to_string(r));
            }
        }
        for (int n = 2; n <= max_m; ++n) {
            const std::string ctx = "q=" + std::to_string(q) + " n=" + std::to_string(n);
            const AverageReport del = avg_1del(n, q, true, limits);
            if (del.avg_direct) {
                rec.record(std::fabs(del.avg_closed - *del.avg_direct) <= 1e-9, "avg 1-del " + ctx);
                rec.record(del.lower_bound <= *del.avg_direct + 1e-12 &&
                               del.min_bits <= *del.avg_direct + 1e-12 &&
                               *del.avg_direct <= del.max_bits + 1e-12,
                           "avg 1-del sandwich " + ctx);
            }
            const AverageReport ins = avg_1ins(n, q, true, limits);
            if (ins.avg_direct) {
                rec.record(std::fabs(ins.avg_closed - *ins.avg_direct) <= 1e-9, "avg 1-ins " + ctx);
                rec.record(ins.lower_bound <= *ins.avg_direct + 1e-12 &&
                               ins.min_bits <= *ins.avg_direct + 1e-12 &&
                               *ins.avg_direct <= ins.max_bits + 1e-12,
                           "avg 1-ins sandwich " + ctx);
            }
        }
    }
    const std::vector<FigureRow> rows = figure_table(2, 100, 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const FigureRow& row = rows[i];
        rec.record(row.lower_bound <= row.avg + 1e-12 && row.avg <= row.max + 1e-12 &&
                       row.min <= row.avg + 1e-12,
                   "figure relationships n=" + std::to_string(row.n));
        if (row.n >= 5) {
            const FigureRow& prev = rows[i - 1];
            rec.record(row.min > prev.min && row.max > prev.max && row.avg > prev.avg &&
                           row.lower_bound > prev.lower_bound,
                       "figure monotonicity n=" + std::to_string(row.n));
        }
    }
    return rec.result;
}

SuiteResult suite_appendix(int max_m, const Limits& limits) {
    Recorder rec;
    rec.result.name = "appendix";
    for (int m = 1; m <= max_m; ++m) {
        const ExtremalResult arg = appendix_weight_argmax(m, limits);
        std::vector<Word> expected{Word(std::vector<Symbol>(static_cast<std::size_t>(m), 0), 2),
                                   Word(std::vector<Symbol>(static_cast<std::size_t>(m), 1), 2)};
        rec.record(sorted_witnesses(arg.witnesses) == expected, "argmax m=" + std::to_string(m));
        if (m <= 6) {
            for_each_word(2, m, [&](const Word& y) {
                const double closed = case2_weight_increment_closed(y);
                const double enumerated = case2_weight_increment_enumerated(y, limits);
                rec.record(std::fabs(closed - enumerated) <= 1e-9, "increment y=" + y.str());
            }, limits);
        }
    }
    return rec.result;
}

}  // namespace

std::string SuiteResult::summary() const {
    if (passed()) return name + ": PASS (" + std::to_string(cases) + " cases)";
    return name + ": FAIL (" + std::to_string(cases) + " cases, " + std::to_string(failures) +
           " failed, first counterexample: " + first_counterexample + ")";
}

SuiteResult run_suite(const std::string& name, int max_m, const Limits& limits) {
    if (max_m < 1) throw std::invalid_argument("--max-m must be at least 1");
    if (name == "normalization") return suite_normalization(max_m, limits);
    if (name == "duality") return suite_duality(max_m, limits);
    if (name == "extremal") return suite_extremal(max_m, limits);
    if (name == "average") return suite_average(max_m, limits);
    if (name == "appendix") return suite_appendix(max_m, limits);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace delins::verify
