#ifndef DELINS_WORD_HPP
#define DELINS_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delins {

using Symbol = std::uint8_t;

/// A finite word over the alphabet {0, 1, ..., q-1}. The alphabet size is
/// carried with the word because every entropy formula depends on it.
/// Immutable after construction.
class Word {
  public:
    /// Validates q >= 2 and every symbol < q. Empty words are permitted as
    /// enumeration boundaries only; most operations reject them.
    Word(std::vector<Symbol> symbols, int q);

    /// Parses a string of digit characters, e.g. "11220" (q <= 10).
    static Word parse(std::string_view text, int q);

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }

    /// Digit-string form, the textual interface for q <= 10.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    /// Lexicographic by symbols; the ordering used for all serialized output.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.q_ <=> b.q_;
    }

  private:
    std::vector<Symbol> symbols_;
    int q_;
};

/// Ordered run lengths (r_1, ..., r_R) of a word.
struct RunLengthProfile {
    std::vector<int> lengths;

    int runs() const noexcept { return static_cast<int>(lengths.size()); }
    int total() const noexcept;
    /// Multiset key: lengths sorted ascending.
    std::vector<int> sorted_lengths() const;

    friend bool operator==(const RunLengthProfile&, const RunLengthProfile&) = default;
};

/// Forward/backward indices into a run profile: f(i) is the smallest run
/// index in [i+1, R] whose length exceeds 1 (default R, and f(R) = R);
/// b(i) is the largest run index in [1, i] whose length exceeds 1
/// (default 1, and b(0) = 1). Run indices are 1-based.
struct RunIndexBounds {
    std::vector<int> forward;   // forward[i] = f_i for i in 0..R
    std::vector<int> backward;  // backward[i] = b_i for i in 0..R

    int f(int i) const { return forward.at(static_cast<std::size_t>(i)); }
    int b(int i) const { return backward.at(static_cast<std::size_t>(i)); }
};

/// Run decomposition of a nonempty word, left to right.
RunLengthProfile run_profile(const Word& w);

/// Number of maximal runs; cheaper than materializing the profile.
int count_runs(std::span<const Symbol> symbols);

RunIndexBounds run_index_bounds(const RunLengthProfile& p);

/// Builds the word with the given profile whose first run uses
/// first_symbol and whose following runs use the canonical symbol
/// sequence (previous + 1) mod q.
Word word_from_profile(const RunLengthProfile& p, int q, Symbol first_symbol);

/// The word of length m with `runs` runs, exactly one of length
/// m - runs + 1 at long_run_position (1-based), all others of length 1.
Word skewed_word(int q, int m, int runs, Symbol first_symbol, int long_run_position);

/// The word of length m with `runs` runs of lengths ceil(m/R) and
/// floor(m/R), long runs first.
Word balanced_word(int q, int m, int runs, Symbol first_symbol);

}  // namespace delins

#endif
