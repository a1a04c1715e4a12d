#include "delins/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace delins {

double weight_sum(std::span<const BallEntry> entries) {
    double s = 0.0;
    for (const auto& e : entries) {
        if (e.weight > 1) s += weight_to_double(e.weight) * weight_log2(e.weight);
    }
    return s;
}

namespace {

void check_output_word(const ChannelSpec& spec, const Word& y) {
    spec.validate();
    if (y.q() != spec.q) throw std::invalid_argument("alphabet mismatch with channel spec");
    if (static_cast<int>(y.size()) != spec.output_length()) {
        throw std::invalid_argument("received word length " + std::to_string(y.size()) +
                                    " does not match channel output length " +
                                    std::to_string(spec.output_length()));
    }
    if (y.empty()) throw std::invalid_argument("entropy of an empty channel output is not defined");
}

}  // namespace

EntropyReport input_entropy(const ChannelSpec& spec, const Word& y, const Limits& limits) {
    check_output_word(spec, y);
    const WeightedBall ball = spec.direction == Direction::deletion
                                  ? insertion_ball(y, spec.k, limits)
                                  : deletion_ball(y, spec.k, limits);
    const Weight normalizer = spec.input_normalizer();
    const double s = weight_sum(ball.entries);
    const double n = weight_to_double(normalizer);
    EntropyReport report;
    report.bits = spec.k == 0 ? 0.0 : weight_log2(normalizer) - s / n;
    report.method = EntropyMethod::enumerated;
    report.ball_size = static_cast<std::uint64_t>(ball.entries.size());
    report.weight_sum = s;
    return report;
}

EntropyReport input_entropy_1del_closed(const Word& y) {
    if (y.empty()) throw std::invalid_argument("entropy of an empty channel output is not defined");
    const RunLengthProfile profile = run_profile(y);
    const double nq = static_cast<double>((y.size() + 1) * static_cast<std::size_t>(y.q()));
    double s = 0.0;
    for (int r : profile.lengths) s += (r + 1) * std::log2(static_cast<double>(r + 1));
    return EntropyReport{std::log2(nq) - s / nq, EntropyMethod::closed_form, std::nullopt, s};
}

EntropyReport input_entropy_1ins_closed(const Word& y) {
    if (y.empty()) throw std::invalid_argument("entropy of an empty channel output is not defined");
    const RunLengthProfile profile = run_profile(y);
    const double m = static_cast<double>(y.size());
    double s = 0.0;
    for (int r : profile.lengths) {
        if (r > 1) s += r * std::log2(static_cast<double>(r));
    }
    return EntropyReport{std::log2(m) - s / m, EntropyMethod::closed_form, std::nullopt, s};
}

EntropyReport output_entropy(const ChannelSpec& spec, const Word& x, const Limits& limits) {
    spec.validate();
    if (x.q() != spec.q) throw std::invalid_argument("alphabet mismatch with channel spec");
    if (static_cast<int>(x.size()) != spec.n) {
        throw std::invalid_argument("transmitted word length " + std::to_string(x.size()) +
                                    " does not match channel input length " + std::to_string(spec.n));
    }
    if (x.empty()) throw std::invalid_argument("entropy of an empty channel input is not defined");
    const WeightedBall ball = spec.direction == Direction::deletion ? deletion_ball(x, spec.k, limits)
                                                                    : insertion_ball(x, spec.k, limits);
    const double n = weight_to_double(spec.normalizer());
    double bits = 0.0;
    for (const auto& e : ball.entries) {
        const double p = weight_to_double(e.weight) / n;
        bits -= p * std::log2(p);
    }
    EntropyReport report;
    report.bits = spec.k == 0 ? 0.0 : bits;
    report.method = EntropyMethod::enumerated;
    report.ball_size = static_cast<std::uint64_t>(ball.entries.size());
    report.weight_sum = weight_sum(ball.entries);
    return report;
}

std::pair<double, double> duality_check(const Word& y, int k, Direction which, const Limits& limits) {
    if (which == Direction::deletion) {
        // H_in of k-Del at output y versus H_out of k-Ins transmitting y.
        const ChannelSpec del = ChannelSpec::for_output(Direction::deletion, k, y);
        const ChannelSpec ins{Direction::insertion, k, y.q(), static_cast<int>(y.size())};
        return {input_entropy(del, y, limits).bits, output_entropy(ins, y, limits).bits};
    }
    const ChannelSpec ins = ChannelSpec::for_output(Direction::insertion, k, y);
    const ChannelSpec del{Direction::deletion, k, y.q(), static_cast<int>(y.size())};
    return {input_entropy(ins, y, limits).bits, output_entropy(del, y, limits).bits};
}

}  // namespace delins
