#include "delins/average.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "delins/entropy.hpp"
#include "delins/enumerate.hpp"
#include "delins/extremal.hpp"

namespace delins {

namespace {

void check_run_args(int m, int r, int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (m < 1) throw std::invalid_argument("word length must be positive");
    if (r < 1 || r > m) {
        throw std::invalid_argument("run length must lie in [1, m], got r=" + std::to_string(r) +
                                    ", m=" + std::to_string(m));
    }
}

/// run_count(m, r, q) / q^m, the per-word expected number of length-r runs.
double run_count_ratio(int m, int r, int q) {
    if (r == m) {
        double ratio = static_cast<double>(q);
        for (int i = 0; i < m; ++i) ratio /= q;
        return ratio;
    }
    double ratio = static_cast<double>((q - 1) * ((q - 1) * (m - r + 1) + 2));
    for (int i = 0; i < r + 1; ++i) ratio /= q;
    return ratio;
}

}  // namespace

std::uint64_t run_count(int m, int r, int q) {
    check_run_args(m, r, q);
    if (r == m) return static_cast<std::uint64_t>(q);
    Weight v = checked_mul(static_cast<Weight>(q - 1),
                           checked_pow(static_cast<Weight>(q), static_cast<unsigned>(m - r - 1)));
    const Weight runs_of_length_r =
        checked_mul(static_cast<Weight>(q - 1), static_cast<Weight>(m - r + 1)) + 2;
    v = checked_mul(v, runs_of_length_r);
    if (v > static_cast<Weight>(UINT64_MAX)) throw std::overflow_error("run count exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

double run_count_literal(int m, int r, int q) {
    check_run_args(m, r, q);
    return (q - 1) * std::pow(static_cast<double>(q), m - r - 1) * ((q - 1) * (m - r + 1) + 2);
}

namespace {

double avg_del_closed(int n, int q) {
    const int m = n - 1;
    double s = 0.0;
    for (int r = 1; r <= m; ++r) {
        s += run_count_ratio(m, r, q) / q * (r + 1) * std::log2(static_cast<double>(r + 1));
    }
    return std::log2(static_cast<double>(n) * q) - s / n;
}

double avg_ins_closed(int n, int q) {
    const int m = n + 1;
    double s = 0.0;
    for (int r = 2; r <= m; ++r) {
        s += run_count_ratio(m, r, q) * r * std::log2(static_cast<double>(r));
    }
    return std::log2(static_cast<double>(m)) - s / m;
}

double del_lb_corrected(int n, int q) {
    const int m = n - 1;
    double s = 0.0;
    for (int r = 1; r <= m; ++r) {
        s += run_count_ratio(m, r, q) / q * (r + 1) * r;
    }
    return std::log2(static_cast<double>(n) * q) - s / n;
}

double ins_lb_corrected(int n, int q) {
    const int m = n + 1;
    double s = 0.0;
    for (int r = 2; r <= m; ++r) {
        s += run_count_ratio(m, r, q) * r * (r - 1);
    }
    return std::log2(static_cast<double>(m)) - s / m;
}

std::optional<double> direct_expectation(int q, int m, Direction direction, const Limits& limits) {
    std::uint64_t size = 1;
    for (int i = 0; i < m; ++i) {
        if (size > limits.max_space / static_cast<std::uint64_t>(q)) return std::nullopt;
        size *= static_cast<std::uint64_t>(q);
    }
    double total = 0.0;
    for_each_word(q, m, [&](const Word& y) {
        total += direction == Direction::deletion ? input_entropy_1del_closed(y).bits
                                                  : input_entropy_1ins_closed(y).bits;
    }, limits);
    return total / static_cast<double>(size);
}

}  // namespace

AverageReport avg_1del(int n, int q, bool want_direct, const Limits& limits) {
    if (n < 2) throw std::invalid_argument("single-deletion average needs n >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    AverageReport report;
    report.n = n;
    report.q = q;
    report.direction = Direction::deletion;
    report.avg_closed = avg_del_closed(n, q);
    report.avg_direct = want_direct ? direct_expectation(q, n - 1, Direction::deletion, limits)
                                    : std::nullopt;
    report.lower_bound = del_lb_corrected(n, q);
    report.min_bits = std::log2(static_cast<double>(n) * q) - std::log2(static_cast<double>(n)) / q;
    report.max_bits = std::log2(static_cast<double>(n) * q) - 2.0 * (n - 1) / (static_cast<double>(n) * q);
    return report;
}

AverageReport avg_1ins(int n, int q, bool want_direct, const Limits& limits) {
    if (n < 2) throw std::invalid_argument("single-insertion average needs n >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    AverageReport report;
    report.n = n;
    report.q = q;
    report.direction = Direction::insertion;
    report.avg_closed = avg_ins_closed(n, q);
    report.avg_direct = want_direct ? direct_expectation(q, n + 1, Direction::insertion, limits)
                                    : std::nullopt;
    report.lower_bound = ins_lb_corrected(n, q);
    report.min_bits = 0.0;
    report.max_bits = std::log2(static_cast<double>(n + 1));
    return report;
}

LowerBounds avg_lower_bounds(int n, int q) {
    if (n < 2) throw std::invalid_argument("lower bounds need n >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    return LowerBounds{del_lb_corrected(n, q), ins_lb_corrected(n, q)};
}

double avg_1del_lower_bound_literal(int n, int q) {
    if (n < 2) throw std::invalid_argument("lower bounds need n >= 2");
    const double qd = static_cast<double>(q);
    const double nd = static_cast<double>(n);
    const double qn1 = std::pow(qd, n + 1);
    const double qn2 = std::pow(qd, n + 2);
    const double term = 2.0 * nd / (qd - 1.0) - (nd * nd - nd) / qn1 +
                        (2.0 * qd * qd - 2.0 * qn2) / ((qd - 1.0) * (qd - 1.0) * qn1);
    return std::log2(nd * qd) - term / nd;
}

std::vector<FigureRow> figure_table(int n_min, int n_max, int q) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("need 2 <= n_min <= n_max");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    std::vector<FigureRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) - static_cast<std::size_t>(n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        FigureRow row;
        row.n = n;
        row.min = std::log2(static_cast<double>(n) * q) - std::log2(static_cast<double>(n)) / q;
        row.max = std::log2(static_cast<double>(n) * q) - 2.0 * (n - 1) / (static_cast<double>(n) * q);
        row.avg = avg_del_closed(n, q);
        row.lower_bound = del_lb_corrected(n, q);
        rows.push_back(row);
    }
    return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
    std::string out = "n,min,max,avg,avg_lower_bound\n";
    char buf[160];
    for (const FigureRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g\n", row.n, row.min, row.max,
                      row.avg, row.lower_bound);
        out += buf;
    }
    return out;
}

}  // namespace delins
