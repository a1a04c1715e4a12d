#ifndef DELINS_ENTROPY_HPP
#define DELINS_ENTROPY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "delins/ball.hpp"
#include "delins/channel.hpp"
#include "delins/config.hpp"

namespace delins {

enum class EntropyMethod { closed_form, enumerated };

/// An entropy value in bits (all logarithms base 2) together with how it
/// was obtained. For enumerated reports,
///   bits = log2(normalizer) - weight_sum / normalizer
/// with the normalizer of the underlying channel, and weight_sum is the
/// sum of w*log2(w) over the ball entries in lexicographic order.
struct EntropyReport {
    double bits;
    EntropyMethod method;
    std::optional<std::uint64_t> ball_size;  // enumerated only
    double weight_sum;

    std::string to_json() const;
};

/// Sum of w * log2(w) over the entries in the given order. Entries of
/// weight 1 contribute zero. Balls hand their entries over in
/// lexicographic order, which makes the accumulation deterministic.
double weight_sum(std::span<const BallEntry> entries);

/// Entropy of the posterior over transmitted words given the received word
/// y, by full ball enumeration. Works for every direction and k; k = 0 is
/// the identity channel with zero entropy.
EntropyReport input_entropy(const ChannelSpec& spec, const Word& y, const Limits& limits = {});

/// Closed form for the single-deletion channel (n = |y| + 1):
///   log2(n q) - (1/(n q)) * sum_i (r_i + 1) log2(r_i + 1).
/// Invariant under permutations of the run-length profile.
EntropyReport input_entropy_1del_closed(const Word& y);

/// Closed form for the single-insertion channel (m = |y|):
///   log2(m) - (1/m) * sum_i r_i log2(r_i).
EntropyReport input_entropy_1ins_closed(const Word& y);

/// Entropy of the channel-output distribution for transmitted word x,
/// computed directly from the out_prob distribution over the ball.
EntropyReport output_entropy(const ChannelSpec& spec, const Word& x, const Limits& limits = {});

/// Both sides of the input/output duality under uniform transmission,
/// each computed independently:
///   deletion:  (H_in of k-Del at y,  H_out of k-Ins transmitting y)
///   insertion: (H_in of k-Ins at y,  H_out of k-Del transmitting y)
std::pair<double, double> duality_check(const Word& y, int k, Direction which,
                                        const Limits& limits = {});

}  // namespace delins

#endif
