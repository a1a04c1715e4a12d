#ifndef DELINS_ENUMERATE_HPP
#define DELINS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "delins/checked.hpp"
#include "delins/config.hpp"
#include "delins/word.hpp"

namespace delins {

/// q^m as uint64, throwing "enumeration too large" when it exceeds
/// limits.max_space.
std::uint64_t space_size_checked(int q, int m, const Limits& limits = {});

/// |Sigma_{q,R}^m| = C(m-1, R-1) * q * (q-1)^{R-1}; zero when R > m.
Weight words_with_runs_count(int q, int m, int runs);

/// The index-th word of Sigma_q^m in lexicographic order (base-q digits,
/// most significant first).
Word nth_word(int q, int m, std::uint64_t index);

/// Advances a symbol vector to its lexicographic successor in Sigma_q^m.
/// Returns false after the last word.
bool next_word_in_place(std::vector<Symbol>& symbols, int q);

/// Yields all q^m words exactly once in lexicographic order.
class WordEnumerator {
  public:
    WordEnumerator(int q, int m, const Limits& limits = {});
    std::optional<Word> next();
    std::uint64_t total() const noexcept { return total_; }

  private:
    int q_;
    std::vector<Symbol> current_;
    std::uint64_t total_;
    std::uint64_t produced_ = 0;
};

/// Yields exactly the words of Sigma_q^m with `runs` runs, in lexicographic
/// order. Empty when runs > m.
class RunConstrainedEnumerator {
  public:
    RunConstrainedEnumerator(int q, int m, int runs, const Limits& limits = {});
    std::optional<Word> next();

  private:
    WordEnumerator inner_;
    int runs_;
    bool empty_;
};

/// Applies fn to every word of Sigma_q^m in lexicographic order.
void for_each_word(int q, int m, const std::function<void(const Word&)>& fn,
                   const Limits& limits = {});

}  // namespace delins

#endif
