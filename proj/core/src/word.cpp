#include "delins/word.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace delins {

namespace {

void check_alphabet(int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2, got " + std::to_string(q));
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    check_alphabet(q);
    for (Symbol s : symbols_) {
        if (static_cast<int>(s) >= q) {
            throw std::invalid_argument("symbol " + std::to_string(static_cast<int>(s)) +
                                        " out of range for q=" + std::to_string(q));
        }
    }
}

Word Word::parse(std::string_view text, int q) {
    check_alphabet(q);
    if (q > 10) throw std::invalid_argument("textual words support q <= 10, got q=" + std::to_string(q));
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument(std::string("invalid character '") + c + "' in word");
        }
        int v = c - '0';
        if (v >= q) {
            throw std::invalid_argument("symbol " + std::to_string(v) + " out of range for q=" + std::to_string(q));
        }
        symbols.push_back(static_cast<Symbol>(v));
    }
    return Word(std::move(symbols), q);
}

std::string Word::str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (Symbol v : symbols_) s.push_back(static_cast<char>('0' + v));
    return s;
}

int RunLengthProfile::total() const noexcept {
    return std::accumulate(lengths.begin(), lengths.end(), 0);
}

std::vector<int> RunLengthProfile::sorted_lengths() const {
    std::vector<int> s = lengths;
    std::sort(s.begin(), s.end());
    return s;
}

RunLengthProfile run_profile(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no runs");
    RunLengthProfile p;
    int len = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++len;
        } else {
            p.lengths.push_back(len);
            len = 1;
        }
    }
    p.lengths.push_back(len);
    return p;
}

int count_runs(std::span<const Symbol> symbols) {
    if (symbols.empty()) return 0;
    int r = 1;
    for (std::size_t i = 1; i < symbols.size(); ++i) {
        if (symbols[i] != symbols[i - 1]) ++r;
    }
    return r;
}

RunIndexBounds run_index_bounds(const RunLengthProfile& p) {
    const int R = p.runs();
    if (R < 1) throw std::invalid_argument("run index bounds need at least one run");
    RunIndexBounds rb;
    rb.forward.assign(static_cast<std::size_t>(R) + 1, R);
    rb.backward.assign(static_cast<std::size_t>(R) + 1, 1);
    // forward[i]: smallest j in [i+1, R] with r_j > 1, else R; forward[R] = R
    for (int i = 0; i < R; ++i) {
        int f = R;
        for (int j = i + 1; j <= R; ++j) {
            if (p.lengths[static_cast<std::size_t>(j - 1)] > 1) {
                f = j;
                break;
            }
        }
        rb.forward[static_cast<std::size_t>(i)] = f;
    }
    // backward[i]: largest j in [1, i] with r_j > 1, else 1; backward[0] = 1
    for (int i = 1; i <= R; ++i) {
        int b = 1;
        for (int j = i; j >= 1; --j) {
            if (p.lengths[static_cast<std::size_t>(j - 1)] > 1) {
                b = j;
                break;
            }
        }
        rb.backward[static_cast<std::size_t>(i)] = b;
    }
    return rb;
}

Word word_from_profile(const RunLengthProfile& p, int q, Symbol first_symbol) {
    check_alphabet(q);
    if (static_cast<int>(first_symbol) >= q) {
        throw std::invalid_argument("symbol " + std::to_string(static_cast<int>(first_symbol)) +
                                    " out of range for q=" + std::to_string(q));
    }
    std::vector<Symbol> symbols;
    symbols.reserve(static_cast<std::size_t>(p.total()));
    Symbol s = first_symbol;
    for (int len : p.lengths) {
        if (len < 1) throw std::invalid_argument("run lengths must be positive");
        symbols.insert(symbols.end(), static_cast<std::size_t>(len), s);
        s = static_cast<Symbol>((s + 1) % q);
    }
    return Word(std::move(symbols), q);
}

Word skewed_word(int q, int m, int runs, Symbol first_symbol, int long_run_position) {
    if (runs < 1 || runs > m) {
        throw std::invalid_argument("need 1 <= runs <= m, got runs=" + std::to_string(runs) +
                                    ", m=" + std::to_string(m));
    }
    if (long_run_position < 1 || long_run_position > runs) {
        throw std::invalid_argument("long run position must lie in [1, runs]");
    }
    RunLengthProfile p;
    p.lengths.assign(static_cast<std::size_t>(runs), 1);
    p.lengths[static_cast<std::size_t>(long_run_position - 1)] = m - runs + 1;
    return word_from_profile(p, q, first_symbol);
}

Word balanced_word(int q, int m, int runs, Symbol first_symbol) {
    if (runs < 1 || runs > m) {
        throw std::invalid_argument("need 1 <= runs <= m, got runs=" + std::to_string(runs) +
                                    ", m=" + std::to_string(m));
    }
    const int lo = m / runs;
    const int hi = lo + (m % runs == 0 ? 0 : 1);
    const int n_hi = m % runs;
    RunLengthProfile p;
    p.lengths.reserve(static_cast<std::size_t>(runs));
    for (int i = 0; i < n_hi; ++i) p.lengths.push_back(hi);
    for (int i = n_hi; i < runs; ++i) p.lengths.push_back(lo);
    return word_from_profile(p, q, first_symbol);
}

}  // namespace delins
