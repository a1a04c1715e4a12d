#include "delins/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "delins/embedding.hpp"
#include "delins/enumerate.hpp"

namespace delins {

namespace {

double xlog2x(double v) {
    return v > 0.0 ? v * std::log2(v) : 0.0;
}

void check_family(int q, int m, int runs) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (m < 1) throw std::invalid_argument("word length must be positive");
    if (runs < 1 || runs > m) {
        throw std::invalid_argument("need 1 <= runs <= m, got runs=" + std::to_string(runs) +
                                    ", m=" + std::to_string(m));
    }
}

Weight labeling_count(int q, int runs) {
    return checked_mul(static_cast<Weight>(q),
                       checked_pow(static_cast<Weight>(q - 1), static_cast<unsigned>(runs - 1)));
}

Weight distinct_permutation_count(const std::vector<int>& sorted_multiset) {
    // product over value groups of C(remaining, group size)
    Weight count = 1;
    std::size_t remaining = sorted_multiset.size();
    std::size_t i = 0;
    while (i < sorted_multiset.size()) {
        std::size_t j = i;
        while (j < sorted_multiset.size() && sorted_multiset[j] == sorted_multiset[i]) ++j;
        count = checked_mul(count, binomial(static_cast<unsigned>(remaining), static_cast<unsigned>(j - i)));
        remaining -= j - i;
        i = j;
    }
    return count;
}

/// All words whose run-length multiset equals the given one (every profile
/// ordering, every run labeling), lexicographically sorted; truncated at
/// limits.max_witnesses.
void profile_class_witnesses(std::vector<int> multiset, int q, const Limits& limits,
                             ExtremalResult& out) {
    std::sort(multiset.begin(), multiset.end());
    const int runs = static_cast<int>(multiset.size());
    out.witness_count = checked_mul(distinct_permutation_count(multiset), labeling_count(q, runs));
    out.truncated = out.witness_count > static_cast<Weight>(limits.max_witnesses);

    std::vector<int> order = multiset;
    std::vector<int> label_digits(static_cast<std::size_t>(runs > 0 ? runs - 1 : 0), 0);
    do {
        // run labelings: first symbol free, every later run any symbol != previous
        for (int first = 0; first < q; ++first) {
            std::fill(label_digits.begin(), label_digits.end(), 0);
            while (true) {
                std::vector<Symbol> symbols;
                Symbol prev = static_cast<Symbol>(first);
                symbols.insert(symbols.end(), static_cast<std::size_t>(order[0]), prev);
                for (int i = 1; i < runs; ++i) {
                    int d = label_digits[static_cast<std::size_t>(i - 1)];
                    Symbol s = static_cast<Symbol>(d < static_cast<int>(prev) ? d : d + 1);
                    symbols.insert(symbols.end(), static_cast<std::size_t>(order[static_cast<std::size_t>(i)]), s);
                    prev = s;
                }
                if (out.witnesses.size() < limits.max_witnesses) {
                    out.witnesses.emplace_back(std::move(symbols), q);
                }
                // advance mixed-radix labeling, base q-1
                int pos = runs - 2;
                while (pos >= 0 && label_digits[static_cast<std::size_t>(pos)] == q - 2) {
                    label_digits[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++label_digits[static_cast<std::size_t>(pos)];
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));

    std::sort(out.witnesses.begin(), out.witnesses.end());
}

std::vector<int> balanced_multiset(int m, int runs) {
    const int lo = m / runs;
    const int n_hi = m % runs;
    std::vector<int> v(static_cast<std::size_t>(runs), lo);
    for (int i = 0; i < n_hi; ++i) v[static_cast<std::size_t>(i)] = lo + 1;
    return v;
}

std::vector<int> skewed_multiset(int m, int runs) {
    std::vector<int> v(static_cast<std::size_t>(runs), 1);
    v[0] = m - runs + 1;
    return v;
}

}  // namespace

ExtremalResult max_1del_fixed_runs(int q, int m, int runs, const Limits& limits) {
    check_family(q, m, runs);
    const double nq = static_cast<double>(m + 1) * q;
    const int lo = m / runs;
    const int hi = lo + 1;
    const int r = m % runs;
    ExtremalResult out;
    out.bits = std::log2(nq) - (r / nq) * (hi + 1) * std::log2(static_cast<double>(hi + 1)) -
               ((runs - r) / nq) * (lo + 1) * std::log2(static_cast<double>(lo + 1));
    out.q = q;
    out.m = m;
    out.runs = runs;
    out.direction = Direction::deletion;
    out.k = 1;
    out.method = "closed_form";
    profile_class_witnesses(balanced_multiset(m, runs), q, limits, out);
    return out;
}

ExtremalResult min_1del_fixed_runs(int q, int m, int runs, const Limits& limits) {
    check_family(q, m, runs);
    const double nq = static_cast<double>(m + 1) * q;
    const double long_run = static_cast<double>(m - runs + 2);
    ExtremalResult out;
    out.bits = std::log2(nq) - (long_run * std::log2(long_run) + 2.0 * (runs - 1)) / nq;
    out.q = q;
    out.m = m;
    out.runs = runs;
    out.direction = Direction::deletion;
    out.k = 1;
    out.method = "closed_form";
    profile_class_witnesses(skewed_multiset(m, runs), q, limits, out);
    return out;
}

std::pair<ExtremalResult, ExtremalResult> global_extrema_1del(int q, int n, const Limits& limits) {
    if (n < 2) throw std::invalid_argument("global single-deletion extrema need n >= 2");
    const int m = n - 1;
    ExtremalResult lo = min_1del_fixed_runs(q, m, 1, limits);
    ExtremalResult hi = max_1del_fixed_runs(q, m, m, limits);
    lo.runs.reset();
    hi.runs.reset();
    return {std::move(lo), std::move(hi)};
}

std::pair<ExtremalResult, ExtremalResult> extrema_1ins_fixed_runs(int q, int m, int runs,
                                                                  const Limits& limits) {
    check_family(q, m, runs);
    const double md = static_cast<double>(m);
    const int lo = m / runs;
    const int hi = lo + 1;
    const int r = m % runs;

    ExtremalResult mini;
    mini.bits = std::log2(md) - (m - runs + 1) * std::log2(static_cast<double>(m - runs + 1)) / md;
    mini.q = q;
    mini.m = m;
    mini.runs = runs;
    mini.direction = Direction::insertion;
    mini.k = 1;
    mini.method = "closed_form";
    profile_class_witnesses(skewed_multiset(m, runs), q, limits, mini);

    ExtremalResult maxi;
    maxi.bits = std::log2(md) -
                (r * hi * std::log2(static_cast<double>(hi)) + (runs - r) * xlog2x(static_cast<double>(lo))) / md;
    maxi.q = q;
    maxi.m = m;
    maxi.runs = runs;
    maxi.direction = Direction::insertion;
    maxi.k = 1;
    maxi.method = "closed_form";
    profile_class_witnesses(balanced_multiset(m, runs), q, limits, maxi);

    return {std::move(mini), std::move(maxi)};
}

std::pair<ExtremalResult, ExtremalResult> global_extrema_1ins(int q, int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("global single-insertion extrema need n >= 1");
    const int m = n + 1;
    ExtremalResult mini = extrema_1ins_fixed_runs(q, m, 1, limits).first;
    ExtremalResult maxi = extrema_1ins_fixed_runs(q, m, m, limits).second;
    mini.runs.reset();
    maxi.runs.reset();
    return {std::move(mini), std::move(maxi)};
}

ExtremalResult min_2del(int m, const Limits& limits) {
    if (m < 1) throw std::invalid_argument("double-deletion minimum needs m >= 1");
    ExtremalResult out;
    out.bits = 2.0 + 0.75 * weight_log2(binomial(static_cast<unsigned>(m + 2), 2)) -
               0.5 * std::log2(static_cast<double>(m + 1));
    out.q = 2;
    out.m = m;
    out.direction = Direction::deletion;
    out.k = 2;
    out.method = "closed_form";
    out.note = "value = 2 + (3/4)log2(C(m+2,2)) - (1/2)log2(m+1), verified by full enumeration; "
               "the C(m,2) variant of the constant does not match the enumerated entropy";
    profile_class_witnesses({m}, 2, limits, out);
    return out;
}

namespace {

/// One contiguous slice of the scan; keeps attainer candidates within the
/// tolerance band of the slice-local extremum.
struct SliceResult {
    double min = 0.0, max = 0.0;
    bool any = false;
    std::vector<std::pair<double, Word>> min_candidates, max_candidates;
    bool min_truncated = false, max_truncated = false;
};

SliceResult scan_slice(const ChannelSpec& spec, std::optional<int> runs, int m,
                       std::uint64_t lo, std::uint64_t hi, const Limits& limits) {
    SliceResult out;
    const int q = spec.q;
    std::vector<Symbol> w = nth_word(q, m, lo).vec();
    std::vector<int> profile;
    profile.reserve(static_cast<std::size_t>(m));

    for (std::uint64_t idx = lo; idx < hi; ++idx, next_word_in_place(w, q)) {
        profile.clear();
        int len = 1;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] == w[i - 1]) {
                ++len;
            } else {
                profile.push_back(len);
                len = 1;
            }
        }
        profile.push_back(len);
        if (runs && static_cast<int>(profile.size()) != *runs) continue;

        double h;
        if (spec.k == 1 && spec.direction == Direction::deletion) {
            const double nq = static_cast<double>(m + 1) * q;
            double s = 0.0;
            for (int r : profile) s += (r + 1) * std::log2(static_cast<double>(r + 1));
            h = std::log2(nq) - s / nq;
        } else if (spec.k == 1 && spec.direction == Direction::insertion) {
            double s = 0.0;
            for (int r : profile) s += xlog2x(static_cast<double>(r));
            h = std::log2(static_cast<double>(m)) - s / static_cast<double>(m);
        } else {
            h = input_entropy(spec, Word(w, q), limits).bits;
        }

        if (!out.any) {
            out.any = true;
            out.min = out.max = h;
        }
        if (h < out.min) out.min = h;
        if (h > out.max) out.max = h;
        if (h <= out.min + kAttainTolerance) {
            if (out.min_candidates.size() < limits.max_witnesses) {
                out.min_candidates.emplace_back(h, Word(w, q));
            } else {
                out.min_truncated = true;
            }
        }
        if (h >= out.max - kAttainTolerance) {
            if (out.max_candidates.size() < limits.max_witnesses) {
                out.max_candidates.emplace_back(h, Word(w, q));
            } else {
                out.max_truncated = true;
            }
        }
    }
    return out;
}

}  // namespace

std::pair<ExtremalResult, ExtremalResult> exhaustive_extremizers(const ChannelSpec& spec,
                                                                 std::optional<int> runs,
                                                                 const Limits& limits) {
    spec.validate();
    const int m = spec.output_length();
    if (m < 1) throw std::invalid_argument("channel output length must be positive");
    if (runs && (*runs < 1)) throw std::invalid_argument("need runs >= 1");
    const std::uint64_t total = space_size_checked(spec.q, m, limits);

    const unsigned threads = std::max(1u, limits.threads);
    std::vector<SliceResult> slices;
    if (threads == 1 || total < std::uint64_t{2} * threads) {
        slices.push_back(scan_slice(spec, runs, m, 0, total, limits));
    } else {
        std::vector<std::future<SliceResult>> futures;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, scan_slice, std::cref(spec), runs, m,
                                         lo, hi, std::cref(limits)));
        }
        for (auto& f : futures) slices.push_back(f.get());
    }

    double gmin = 0.0, gmax = 0.0;
    bool any = false;
    for (const auto& s : slices) {
        if (!s.any) continue;
        if (!any) {
            any = true;
            gmin = s.min;
            gmax = s.max;
        }
        gmin = std::min(gmin, s.min);
        gmax = std::max(gmax, s.max);
    }
    if (!any) throw std::invalid_argument("no words with the requested number of runs");

    auto assemble = [&](bool take_min, double extremum) {
        ExtremalResult out;
        out.bits = extremum;
        out.q = spec.q;
        out.m = m;
        out.runs = runs;
        out.direction = spec.direction;
        out.k = spec.k;
        out.method = "exhaustive";
        Weight count = 0;
        for (const auto& s : slices) {
            const auto& cands = take_min ? s.min_candidates : s.max_candidates;
            for (const auto& [h, word] : cands) {
                const bool in_band = take_min ? h <= extremum + kAttainTolerance
                                              : h >= extremum - kAttainTolerance;
                if (!in_band) continue;
                count = checked_add(count, 1);
                if (out.witnesses.size() < limits.max_witnesses) {
                    out.witnesses.push_back(word);
                } else {
                    out.truncated = true;
                }
            }
            out.truncated = out.truncated || (take_min ? s.min_truncated : s.max_truncated);
        }
        out.witness_count = count;
        return out;
    };

    return {assemble(true, gmin), assemble(false, gmax)};
}

double case2_weight_increment_closed(const Word& y) {
    if (y.q() != 2) throw std::invalid_argument("weight increment stated for binary words only");
    if (y.empty()) throw std::invalid_argument("weight increment needs a nonempty word");
    const RunLengthProfile profile = run_profile(y);
    const RunIndexBounds rb = run_index_bounds(profile);
    const int m = static_cast<int>(y.size());
    const int R = profile.runs();
    const double r1 = static_cast<double>(profile.lengths.front());

    double s = 0.0;
    for (int i = 1; i <= rb.f(1); ++i) s += profile.lengths[static_cast<std::size_t>(i - 1)];

    double value = xlog2x(weight_to_double(binomial(static_cast<unsigned>(r1) + 3, 2))) -
                   xlog2x(weight_to_double(binomial(static_cast<unsigned>(r1) + 2, 2)));
    value += xlog2x(s + 2.0) - xlog2x(s + 1.0);
    value += (m - R + 1) * ((r1 + 2.0) * std::log2(r1 + 2.0) - (r1 + 1.0) * std::log2(r1 + 1.0));
    for (int i = 2; i <= R; ++i) {
        const double ri = static_cast<double>(profile.lengths[static_cast<std::size_t>(i - 1)]);
        value += xlog2x((r1 + 2.0) * (ri + 1.0)) - xlog2x((r1 + 1.0) * (ri + 1.0));
    }
    return value;
}

double case2_weight_increment_enumerated(const Word& y, const Limits& limits) {
    if (y.q() != 2) throw std::invalid_argument("weight increment stated for binary words only");
    if (y.empty()) throw std::invalid_argument("weight increment needs a nonempty word");
    const Symbol head = y[0];
    std::vector<Symbol> tail(y.symbols().begin() + 1, y.symbols().end());
    const WeightedBall ball = insertion_ball(Word(std::move(tail), 2), 2, limits);

    std::vector<Symbol> extended(y.size() + 1);
    extended[0] = head;
    std::copy(y.symbols().begin(), y.symbols().end(), extended.begin() + 1);

    double w_extended = 0.0, w_base = 0.0;
    std::vector<Symbol> u;
    for (const auto& entry : ball.entries) {
        u.clear();
        u.push_back(head);
        u.push_back(head);
        u.insert(u.end(), entry.word.symbols().begin(), entry.word.symbols().end());
        w_extended += xlog2x(weight_to_double(embedding_count(u, extended)));
        u.erase(u.begin());
        w_base += xlog2x(weight_to_double(embedding_count(u, y.symbols())));
    }
    return w_extended - w_base;
}

ExtremalResult appendix_weight_argmax(int m, const Limits& limits) {
    if (m < 1) throw std::invalid_argument("argmax scan needs m >= 1");
    const std::uint64_t total = space_size_checked(2, m, limits);
    ExtremalResult out;
    out.q = 2;
    out.m = m;
    out.direction = Direction::deletion;
    out.k = 2;
    out.method = "exhaustive";
    out.note = "value is the maximal prepend weight-sum increment, not an entropy";

    // first pass finds the maximum, second collects the attainment band
    std::vector<Symbol> w(static_cast<std::size_t>(m), 0);
    double best = case2_weight_increment_closed(Word(w, 2));
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        next_word_in_place(w, 2);
        best = std::max(best, case2_weight_increment_closed(Word(w, 2)));
    }
    std::vector<Word> arg;
    std::fill(w.begin(), w.end(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx, next_word_in_place(w, 2)) {
        const double v = case2_weight_increment_closed(Word(w, 2));
        if (v >= best - kAttainTolerance && arg.size() < limits.max_witnesses) arg.emplace_back(w, 2);
    }
    out.bits = best;
    out.witnesses = std::move(arg);
    out.witness_count = static_cast<Weight>(out.witnesses.size());
    return out;
}

}  // namespace delins
