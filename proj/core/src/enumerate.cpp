#include "delins/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace delins {

std::uint64_t space_size_checked(int q, int m, const Limits& limits) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (m < 0) throw std::invalid_argument("word length must be nonnegative");
    std::uint64_t size = 1;
    for (int i = 0; i < m; ++i) {
        if (size > limits.max_space / static_cast<std::uint64_t>(q)) {
            throw std::runtime_error("enumeration too large: q^m exceeds --max-space " +
                                     std::to_string(limits.max_space) + " (q=" + std::to_string(q) +
                                     ", m=" + std::to_string(m) + ")");
        }
        size *= static_cast<std::uint64_t>(q);
    }
    if (size > limits.max_space) {
        throw std::runtime_error("enumeration too large: q^m = " + std::to_string(size) +
                                 " exceeds --max-space " + std::to_string(limits.max_space));
    }
    return size;
}

Weight words_with_runs_count(int q, int m, int runs) {
    if (m < 1 || runs < 1) throw std::invalid_argument("need m >= 1 and runs >= 1");
    if (runs > m) return 0;
    Weight c = binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(runs - 1));
    c = checked_mul(c, static_cast<Weight>(q));
    c = checked_mul(c, checked_pow(static_cast<Weight>(q - 1), static_cast<unsigned>(runs - 1)));
    return c;
}

Word nth_word(int q, int m, std::uint64_t index) {
    std::vector<Symbol> symbols(static_cast<std::size_t>(m), 0);
    for (int i = m - 1; i >= 0; --i) {
        symbols[static_cast<std::size_t>(i)] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    if (index != 0) throw std::out_of_range("word index out of range");
    return Word(std::move(symbols), q);
}

bool next_word_in_place(std::vector<Symbol>& symbols, int q) {
    for (std::size_t i = symbols.size(); i-- > 0;) {
        if (static_cast<int>(symbols[i]) + 1 < q) {
            ++symbols[i];
            return true;
        }
        symbols[i] = 0;
    }
    return false;
}

WordEnumerator::WordEnumerator(int q, int m, const Limits& limits) : q_(q) {
    if (m < 1) throw std::invalid_argument("enumeration needs m >= 1");
    total_ = space_size_checked(q, m, limits);
    current_.assign(static_cast<std::size_t>(m), 0);
}

std::optional<Word> WordEnumerator::next() {
    if (produced_ == total_) return std::nullopt;
    Word w(current_, q_);
    ++produced_;
    if (produced_ < total_) next_word_in_place(current_, q_);
    return w;
}

RunConstrainedEnumerator::RunConstrainedEnumerator(int q, int m, int runs, const Limits& limits)
    : inner_(q, m, limits), runs_(runs), empty_(runs > m) {
    if (runs < 1) throw std::invalid_argument("need runs >= 1");
}

std::optional<Word> RunConstrainedEnumerator::next() {
    if (empty_) return std::nullopt;
    while (auto w = inner_.next()) {
        if (count_runs(w->symbols()) == runs_) return w;
    }
    return std::nullopt;
}

void for_each_word(int q, int m, const std::function<void(const Word&)>& fn, const Limits& limits) {
    WordEnumerator e(q, m, limits);
    while (auto w = e.next()) fn(*w);
}

}  // namespace delins
