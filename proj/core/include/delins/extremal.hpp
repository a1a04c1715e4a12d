#ifndef DELINS_EXTREMAL_HPP
#define DELINS_EXTREMAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delins/channel.hpp"
#include "delins/config.hpp"
#include "delins/entropy.hpp"

namespace delins {

/// Attainment tolerance: every word whose entropy lies within this band of
/// the extremum counts as a witness.
inline constexpr double kAttainTolerance = 1e-12;

/// An extremal entropy value together with the words attaining it.
/// Witnesses are lexicographically sorted. witness_count is the exact
/// number of attainers (combinatorially derived for closed forms); the
/// materialized list is truncated at Limits::max_witnesses.
struct ExtremalResult {
    double bits = 0.0;
    std::vector<Word> witnesses;
    Weight witness_count = 0;
    bool truncated = false;
    int q = 0;
    int m = 0;  // length of the scanned channel outputs
    std::optional<int> runs;
    Direction direction = Direction::deletion;
    int k = 1;
    std::string method;  // "closed_form" or "exhaustive"
    std::string note;

    std::string to_json(std::size_t witness_limit = 64) const;
};

/// Closed-form extrema of the single-deletion input entropy over all
/// channel outputs of length m with exactly `runs` runs. The maximum is
/// attained exactly by the balanced words, the minimum exactly by the
/// skewed words.
ExtremalResult max_1del_fixed_runs(int q, int m, int runs, const Limits& limits = {});
ExtremalResult min_1del_fixed_runs(int q, int m, int runs, const Limits& limits = {});

/// Global single-deletion extrema over Sigma_q^{n-1} as (min, max):
///   min = log2(nq) - log2(n)/q, attained only by the constant words;
///   max = log2(nq) - 2(n-1)/(nq), attained only by words with n-1 runs.
std::pair<ExtremalResult, ExtremalResult> global_extrema_1del(int q, int n, const Limits& limits = {});

/// Single-insertion analogue over outputs of length m with `runs` runs,
/// returned as (min, max); skewed words minimize, balanced words maximize.
std::pair<ExtremalResult, ExtremalResult> extrema_1ins_fixed_runs(int q, int m, int runs,
                                                                  const Limits& limits = {});

/// Global single-insertion extrema over Sigma_q^{n+1} as (min, max):
/// min = 0 (constant words), max = log2(n+1) (alternating words).
std::pair<ExtremalResult, ExtremalResult> global_extrema_1ins(int q, int n, const Limits& limits = {});

/// Minimum double-deletion input entropy over binary outputs of length m,
///   2 + (3/4) log2 C(m+2, 2) - (1/2) log2(m+1),
/// attained only by the two constant words. The closed form is validated
/// against full enumeration; the variant using C(m, 2) in place of
/// C(m+2, 2) does not match the enumerated entropy and is rejected.
ExtremalResult min_2del(int m, const Limits& limits = {});

/// Brute-force oracle: scans all of Sigma_q^m (restricted to `runs` runs
/// when given), computes the exact input entropy of every word for the
/// spec's channel, and returns (min, max) with the full attainer sets.
/// May partition the scan across Limits::threads; the result is
/// independent of the partitioning.
std::pair<ExtremalResult, ExtremalResult> exhaustive_extremizers(const ChannelSpec& spec,
                                                                 std::optional<int> runs = std::nullopt,
                                                                 const Limits& limits = {});

/// Closed form for the weight-sum increment contributed by prepending a
/// copy of the leading bit (the equal-leading-bits branch of the
/// double-deletion analysis), for binary y with profile (r_1..r_R):
///   C(r1+3,2)log2 C(r1+3,2) - C(r1+2,2)log2 C(r1+2,2)
///   + (S+2)log2(S+2) - (S+1)log2(S+1)            with S = sum_{i<=f_1} r_i
///   + (m-R+1)[(r1+2)log2(r1+2) - (r1+1)log2(r1+1)]
///   + sum_{i>=2} [(r1+2)(ri+1)log2((r1+2)(ri+1)) - (r1+1)(ri+1)log2((r1+1)(ri+1))].
/// Verified to equal case2_weight_increment_enumerated exactly.
double case2_weight_increment_closed(const Word& y);

/// The same increment computed from first principles:
///   W over {y1 y1 . x : x in I_2(y[2:])} of y1 . y
/// minus
///   W over {y1 . x : x in I_2(y[2:])} of y,
/// with W the sum of w log2 w over embedding multiplicities.
double case2_weight_increment_enumerated(const Word& y, const Limits& limits = {});

/// Argmax of case2_weight_increment_closed over all binary words of
/// length m; the maximizers are exactly the two constant words.
ExtremalResult appendix_weight_argmax(int m, const Limits& limits = {});

}  // namespace delins

#endif
