#include "delins/embedding.hpp"

#include <stdexcept>
#include <vector>

namespace delins {

Weight embedding_count(std::span<const Symbol> x, std::span<const Symbol> y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (m > n) return 0;
    // dp[j] = number of embeddings of y[0..j) into the prefix of x seen so far
    std::vector<Weight> dp(m + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t hi = std::min(i + 1, m);
        for (std::size_t j = hi; j >= 1; --j) {
            if (x[i] == y[j - 1]) dp[j] = checked_add(dp[j], dp[j - 1]);
        }
    }
    return dp[m];
}

Weight embedding_number(const Word& x, const Word& y) {
    if (x.q() != y.q()) throw std::invalid_argument("alphabet mismatch between words");
    if (y.size() > x.size()) throw std::invalid_argument("embedded word longer than host word");
    return embedding_count(x.symbols(), y.symbols());
}

PrependCheck prepend_recursion_check(const Word& x, const Word& y, Symbol alpha) {
    if (x.q() != y.q()) throw std::invalid_argument("alphabet mismatch between words");
    if (y.size() > x.size()) throw std::invalid_argument("embedded word longer than host word");
    if (static_cast<int>(alpha) >= x.q()) throw std::invalid_argument("prepended symbol out of range");
    const std::size_t n = x.size();
    const std::size_t k = n - y.size();

    std::vector<Symbol> ax(x.size() + 1);
    ax[0] = alpha;
    std::copy(x.symbols().begin(), x.symbols().end(), ax.begin() + 1);
    std::vector<Symbol> ay(y.size() + 1);
    ay[0] = alpha;
    std::copy(y.symbols().begin(), y.symbols().end(), ay.begin() + 1);

    PrependCheck out;
    out.lhs = embedding_count(ax, ay);
    out.rhs = embedding_count(x.symbols(), y.symbols());
    for (std::size_t i = 1; i <= k; ++i) {
        if (x[i - 1] == alpha) {
            out.rhs = checked_add(out.rhs, embedding_count(x.symbols().subspan(i), y.symbols()));
        }
    }
    return out;
}

}  // namespace delins
