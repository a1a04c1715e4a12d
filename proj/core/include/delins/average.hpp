#ifndef DELINS_AVERAGE_HPP
#define DELINS_AVERAGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delins/ball.hpp"
#include "delins/config.hpp"

namespace delins {

/// Total number of length-r runs across all words of Sigma_q^m, exact.
/// For r < m this is (q-1) q^{m-r-1} ((q-1)(m-r+1) + 2); at the boundary
/// r = m that expression evaluates to the non-integer (q^2-1)/q, so the
/// correct census value q is used instead. Matches a brute-force run
/// census exactly.
std::uint64_t run_count(int m, int r, int q);

/// The uncorrected closed-form value, exposed for reference; non-integer
/// at r = m.
double run_count_literal(int m, int r, int q);

/// Average input entropies, their analytic lower bounds, and the global
/// envelope for one channel direction at transmitted length n.
struct AverageReport {
    int n;
    int q;
    Direction direction;
    double avg_closed;
    std::optional<double> avg_direct;  // omitted when q^m exceeds the cap
    double lower_bound;
    double min_bits;
    double max_bits;

    std::string to_json() const;
};

/// Single-deletion average over channel outputs Sigma_q^{n-1}:
///   log2(nq) - (1/(n q^n)) sum_r run_count(n-1, r, q) (r+1) log2(r+1),
/// cross-checked against the direct expectation whenever q^{n-1} is within
/// limits.max_space (and want_direct is set).
AverageReport avg_1del(int n, int q, bool want_direct = true, const Limits& limits = {});

/// Single-insertion average over channel outputs Sigma_q^{n+1}:
///   log2(n+1) - (1/((n+1) q^{n+1})) sum_r run_count(n+1, r, q) r log2(r).
AverageReport avg_1ins(int n, int q, bool want_direct = true, const Limits& limits = {});

/// Analytic lower bounds obtained from log2(r+1) <= r applied termwise to
/// the average sums (deletion: (r+1)log2(r+1) <= r(r+1); insertion:
/// r log2(r) <= r(r-1)), evaluated with the boundary-corrected run counts
/// so that the bounds hold at every n >= 2.
struct LowerBounds {
    double del_lb;
    double ins_lb;
};
LowerBounds avg_lower_bounds(int n, int q);

/// The same deletion bound evaluated with the uncorrected run counts and
/// summed in closed form. Kept for reference: it exceeds the true average
/// at n = 2, which is why the reported bound uses the corrected counts.
double avg_1del_lower_bound_literal(int n, int q);

/// One row of the single-deletion entropy envelope.
struct FigureRow {
    int n;
    double min;
    double max;
    double avg;
    double lower_bound;
};

/// Rows (n, global min, global max, closed-form average, lower bound) for
/// n in [n_min, n_max].
std::vector<FigureRow> figure_table(int n_min, int n_max, int q);

/// CSV with header "n,min,max,avg,avg_lower_bound", values printed with 12
/// significant digits.
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace delins

#endif
