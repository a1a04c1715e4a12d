#ifndef DELINS_CHECKED_HPP
#define DELINS_CHECKED_HPP

#include <cstdint>
#include <string>

namespace delins {

/// Embedding multiplicities grow combinatorially, so they are carried as
/// 128-bit unsigned integers with overflow-checked arithmetic. Overflow
/// throws std::overflow_error; it never wraps silently.
using Weight = unsigned __int128;

Weight checked_add(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

/// Exact binomial coefficient C(n, k).
Weight binomial(unsigned n, unsigned k);

/// Exact base^exp.
Weight checked_pow(Weight base, unsigned exp);

std::string weight_str(Weight w);
double weight_to_double(Weight w);
double weight_log2(Weight w);

}  // namespace delins

#endif
