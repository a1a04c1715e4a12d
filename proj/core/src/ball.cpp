#include "delins/ball.hpp"

#include <algorithm>
#include <stdexcept>

#include "delins/embedding.hpp"

namespace delins {

std::string direction_name(Direction d) {
    return d == Direction::deletion ? "del" : "ins";
}

Direction parse_direction(const std::string& name) {
    if (name == "del" || name == "deletion") return Direction::deletion;
    if (name == "ins" || name == "insertion") return Direction::insertion;
    throw std::invalid_argument("unknown direction '" + name + "', expected del or ins");
}

Weight WeightedBall::weight_total() const {
    Weight t = 0;
    for (const auto& e : entries) t = checked_add(t, e.weight);
    return t;
}

std::string WeightedBall::to_text() const {
    std::string out;
    for (const auto& e : entries) {
        out += e.word.str();
        out += '\t';
        out += weight_str(e.weight);
        out += '\n';
    }
    return out;
}

Weight insertion_ball_size(int length, int k, int q) {
    if (length < 0 || k < 0) throw std::invalid_argument("insertion ball needs length >= 0 and k >= 0");
    const unsigned n = static_cast<unsigned>(length + k);
    Weight total = 0;
    for (int i = 0; i <= k; ++i) {
        total = checked_add(total, checked_mul(binomial(n, static_cast<unsigned>(i)),
                                               checked_pow(static_cast<Weight>(q - 1),
                                                           static_cast<unsigned>(i))));
    }
    return total;
}

namespace {

std::vector<std::vector<Symbol>> grow_by_insertion(const std::vector<std::vector<Symbol>>& level, int q) {
    std::vector<std::vector<Symbol>> next;
    next.reserve(level.size() * (level.empty() ? 1 : (level.front().size() + 1) * static_cast<std::size_t>(q)));
    for (const auto& w : level) {
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            for (int s = 0; s < q; ++s) {
                std::vector<Symbol> v;
                v.reserve(w.size() + 1);
                v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                v.push_back(static_cast<Symbol>(s));
                v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
                next.push_back(std::move(v));
            }
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

std::vector<std::vector<Symbol>> shrink_by_deletion(const std::vector<std::vector<Symbol>>& level) {
    std::vector<std::vector<Symbol>> next;
    next.reserve(level.size() * (level.empty() ? 1 : level.front().size()));
    for (const auto& w : level) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            std::vector<Symbol> v;
            v.reserve(w.size() - 1);
            v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
            next.push_back(std::move(v));
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

}  // namespace

WeightedBall insertion_ball(const Word& y, int k, const Limits& limits) {
    if (k < 0) throw std::invalid_argument("insertion ball needs k >= 0");
    const Weight size = insertion_ball_size(static_cast<int>(y.size()), k, y.q());
    if (size > static_cast<Weight>(limits.max_ball)) {
        throw std::runtime_error("insertion ball too large: " + weight_str(size) +
                                 " entries exceed --max-ball " + std::to_string(limits.max_ball));
    }
    std::vector<std::vector<Symbol>> level{std::vector<Symbol>(y.symbols().begin(), y.symbols().end())};
    for (int step = 0; step < k; ++step) level = grow_by_insertion(level, y.q());

    WeightedBall ball{y, k, Direction::insertion, {}};
    ball.entries.reserve(level.size());
    for (auto& v : level) {
        Weight w = embedding_count(v, y.symbols());
        ball.entries.push_back(BallEntry{Word(std::move(v), y.q()), w});
    }
    return ball;
}

WeightedBall deletion_ball(const Word& x, int k, const Limits& limits) {
    if (k < 0) throw std::invalid_argument("deletion ball needs k >= 0");
    if (static_cast<std::size_t>(k) > x.size()) {
        throw std::invalid_argument("cannot delete " + std::to_string(k) + " symbols from a word of length " +
                                    std::to_string(x.size()));
    }
    const Weight bound = binomial(static_cast<unsigned>(x.size()), static_cast<unsigned>(k));
    if (bound > static_cast<Weight>(limits.max_ball)) {
        throw std::runtime_error("deletion ball too large: up to " + weight_str(bound) +
                                 " entries exceed --max-ball " + std::to_string(limits.max_ball));
    }
    std::vector<std::vector<Symbol>> level{std::vector<Symbol>(x.symbols().begin(), x.symbols().end())};
    for (int step = 0; step < k; ++step) level = shrink_by_deletion(level);

    WeightedBall ball{x, k, Direction::deletion, {}};
    ball.entries.reserve(level.size());
    for (auto& v : level) {
        Weight w = embedding_count(x.symbols(), v);
        ball.entries.push_back(BallEntry{Word(std::move(v), x.q()), w});
    }
    return ball;
}

namespace {

void require_binary(const Word& y, const char* what) {
    if (y.q() != 2) throw std::invalid_argument(std::string(what) + " stated for binary words only");
    if (y.empty()) throw std::invalid_argument(std::string(what) + " needs a nonempty word");
}

}  // namespace

TwoRunInsertion two_run_insertion_embedding(const Word& y, int run_index) {
    require_binary(y, "two-run insertion lemma");
    const RunLengthProfile profile = run_profile(y);
    const int R = profile.runs();
    if (run_index < 0 || run_index > R) {
        throw std::invalid_argument("run index must lie in [0, R]");
    }

    // Run symbols of y alternate starting from y[0].
    std::vector<Symbol> run_symbol(static_cast<std::size_t>(R));
    for (int i = 0; i < R; ++i) run_symbol[static_cast<std::size_t>(i)] = static_cast<Symbol>((y[0] + i) % 2);

    std::vector<Symbol> xs;
    xs.reserve(y.size() + 2);
    if (run_index == 0) {
        // Prepend "s (1-s)" before the first run of symbol s.
        xs.push_back(y[0]);
        xs.push_back(static_cast<Symbol>(1 - y[0]));
        xs.insert(xs.end(), y.symbols().begin(), y.symbols().end());
    } else {
        std::size_t offset = 0;
        for (int i = 0; i < run_index; ++i) offset += static_cast<std::size_t>(profile.lengths[static_cast<std::size_t>(i)]);
        const Symbol s = run_symbol[static_cast<std::size_t>(run_index - 1)];
        xs.insert(xs.end(), y.symbols().begin(), y.symbols().begin() + static_cast<std::ptrdiff_t>(offset));
        xs.push_back(static_cast<Symbol>(1 - s));
        xs.push_back(s);
        xs.insert(xs.end(), y.symbols().begin() + static_cast<std::ptrdiff_t>(offset), y.symbols().end());
    }

    const RunIndexBounds rb = run_index_bounds(profile);
    Weight w = 1;
    for (int j = rb.b(run_index); j <= rb.f(run_index); ++j) {
        w = checked_add(w, static_cast<Weight>(profile.lengths[static_cast<std::size_t>(j - 1)]));
    }
    return TwoRunInsertion{Word(std::move(xs), 2), w};
}

SpecialSupersequences special_supersequences(const Word& y) {
    require_binary(y, "distinguished supersequences");
    const RunLengthProfile profile = run_profile(y);
    const RunIndexBounds rb = run_index_bounds(profile);
    const Symbol s = y[0];
    const Symbol t = static_cast<Symbol>(1 - s);

    auto prepend = [&](std::initializer_list<Symbol> prefix) {
        std::vector<Symbol> v;
        v.reserve(y.size() + prefix.size());
        v.insert(v.end(), prefix.begin(), prefix.end());
        v.insert(v.end(), y.symbols().begin(), y.symbols().end());
        return Word(std::move(v), 2);
    };

    SpecialSupersequences out{prepend({s, t}), 1, prepend({t, t}), 1, prepend({t, s}), 1};
    for (int j = 1; j <= rb.f(0); ++j) {
        out.beta_weight = checked_add(out.beta_weight, static_cast<Weight>(profile.lengths[static_cast<std::size_t>(j - 1)]));
    }
    out.gamma_weight = 1;
    out.delta_weight = static_cast<Weight>(profile.lengths.front()) + 1;
    return out;
}

}  // namespace delins
