#include "delins/checked.hpp"

#include <cmath>
#include <stdexcept>

namespace delins {

Weight checked_add(Weight a, Weight b) {
    Weight s = a + b;
    if (s < a) throw std::overflow_error("weight overflow in addition");
    return s;
}

Weight checked_mul(Weight a, Weight b) {
    if (a == 0 || b == 0) return 0;
    Weight p = a * b;
    if (p / a != b) throw std::overflow_error("weight overflow in multiplication");
    return p;
}

Weight binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Weight r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

Weight checked_pow(Weight base, unsigned exp) {
    Weight r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::string weight_str(Weight w) {
    if (w == 0) return "0";
    std::string s;
    while (w > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(w % 10)));
        w /= 10;
    }
    return {s.rbegin(), s.rend()};
}

double weight_to_double(Weight w) {
    return static_cast<double>(w);
}

double weight_log2(Weight w) {
    if (w == 0) throw std::domain_error("log2 of zero weight");
    return std::log2(static_cast<double>(w));
}

}  // namespace delins
