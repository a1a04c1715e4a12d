#ifndef DELINS_EMBEDDING_HPP
#define DELINS_EMBEDDING_HPP

#include <span>

#include "delins/checked.hpp"
#include "delins/word.hpp"

namespace delins {

/// Number of distinct index sets realizing y as a subsequence of x,
/// counted by the standard subsequence dynamic program in exact integer
/// arithmetic. Requires |y| <= |x| and matching alphabets.
Weight embedding_number(const Word& x, const Word& y);

/// Same count on raw symbol spans; returns 0 when |y| > |x| instead of
/// throwing. Internal building block for balls and recursions.
Weight embedding_count(std::span<const Symbol> x, std::span<const Symbol> y);

/// Both sides of the prepend identity
///   omega_{a.y}(a.x) = omega_y(x) + sum_{i=1..k} omega_y(x[i+1..n]) * [a == x_i]
/// with k = |x| - |y|, each computed independently. Equal by the identity;
/// the pair is returned so tests can assert it.
struct PrependCheck {
    Weight lhs;
    Weight rhs;
};
PrependCheck prepend_recursion_check(const Word& x, const Word& y, Symbol alpha);

}  // namespace delins

#endif
