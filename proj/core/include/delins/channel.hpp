#ifndef DELINS_CHANNEL_HPP
#define DELINS_CHANNEL_HPP

#include <string>

#include "delins/ball.hpp"
#include "delins/checked.hpp"
#include "delins/word.hpp"

namespace delins {

/// A channel that deletes (or inserts) exactly k symbols of an n-symbol
/// transmitted word, positions (and inserted values) uniform at random.
/// Transmission is uniform over Sigma_q^n throughout this library.
struct ChannelSpec {
    Direction direction;
    int k;
    int q;
    int n;  // transmitted length

    int output_length() const {
        return direction == Direction::deletion ? n - k : n + k;
    }
    /// Total conditional-probability denominator: C(n,k) for deletion,
    /// C(n+k,k) * q^k for insertion.
    Weight normalizer() const;
    /// Posterior denominator given a channel output: C(n,k) * q^k for
    /// deletion (weights over the insertion ball of the output),
    /// C(n+k,k) for insertion (weights over the deletion ball).
    Weight input_normalizer() const;
    void validate() const;

    /// Spec whose output is the given word (n inferred from |y| and k).
    static ChannelSpec for_output(Direction direction, int k, const Word& y);
};

/// Exact nonnegative rational, kept reduced.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Weight num, Weight den);

    Weight num() const noexcept { return num_; }
    Weight den() const noexcept { return den_; }
    double to_double() const { return weight_to_double(num_) / weight_to_double(den_); }
    std::string str() const { return weight_str(num_) + "/" + weight_str(den_); }

    Rational operator+(const Rational& other) const;
    friend bool operator==(const Rational&, const Rational&) = default;

  private:
    Weight num_;
    Weight den_;
};

/// Pr{ y received | x transmitted }: omega_y(x)/C(n,k) for the deletion
/// channel and omega_x(y)/(C(n+k,k) q^k) for the insertion channel.
/// Zero when y is outside the channel ball of x.
Rational out_prob(const ChannelSpec& spec, const Word& x, const Word& y);

}  // namespace delins

#endif
