#include "delins/channel.hpp"

#include <stdexcept>

#include "delins/embedding.hpp"

namespace delins {

namespace {

Weight weight_gcd(Weight a, Weight b) {
    while (b != 0) {
        Weight t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Weight ChannelSpec::normalizer() const {
    if (direction == Direction::deletion) {
        return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    }
    return checked_mul(binomial(static_cast<unsigned>(n + k), static_cast<unsigned>(k)),
                       checked_pow(static_cast<Weight>(q), static_cast<unsigned>(k)));
}

Weight ChannelSpec::input_normalizer() const {
    if (direction == Direction::deletion) {
        return checked_mul(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)),
                           checked_pow(static_cast<Weight>(q), static_cast<unsigned>(k)));
    }
    return binomial(static_cast<unsigned>(n + k), static_cast<unsigned>(k));
}

void ChannelSpec::validate() const {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (k < 0) throw std::invalid_argument("error count must be nonnegative");
    if (n < 1) throw std::invalid_argument("transmitted length must be positive");
    if (direction == Direction::deletion && k > n) {
        throw std::invalid_argument("deletion channel needs k <= n");
    }
}

ChannelSpec ChannelSpec::for_output(Direction direction, int k, const Word& y) {
    const int m = static_cast<int>(y.size());
    const int n = direction == Direction::deletion ? m + k : m - k;
    ChannelSpec spec{direction, k, y.q(), n};
    spec.validate();
    return spec;
}

Rational::Rational(Weight num, Weight den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Weight g = weight_gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator+(const Rational& other) const {
    Weight g = weight_gcd(den_, other.den_);
    Weight scaled_other = den_ / g;
    Weight den = checked_mul(other.den_, scaled_other);
    Weight num = checked_add(checked_mul(num_, other.den_ / g), checked_mul(other.num_, scaled_other));
    return Rational(num, den);
}

Rational out_prob(const ChannelSpec& spec, const Word& x, const Word& y) {
    spec.validate();
    if (x.q() != spec.q || y.q() != spec.q) throw std::invalid_argument("alphabet mismatch with channel spec");
    if (static_cast<int>(x.size()) != spec.n) {
        throw std::invalid_argument("transmitted word length " + std::to_string(x.size()) +
                                    " does not match channel input length " + std::to_string(spec.n));
    }
    if (static_cast<int>(y.size()) != spec.output_length()) {
        throw std::invalid_argument("received word length " + std::to_string(y.size()) +
                                    " does not match channel output length " +
                                    std::to_string(spec.output_length()));
    }
    const Weight w = spec.direction == Direction::deletion ? embedding_count(x.symbols(), y.symbols())
                                                           : embedding_count(y.symbols(), x.symbols());
    return Rational(w, spec.normalizer());
}

}  // namespace delins
