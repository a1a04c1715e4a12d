// Command line surface for the delins library: entropies, weighted balls,
// extremal results, averages, the figure CSV, and the verification suites.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <delins/delins.hpp>

#include "verify_suites.hpp"

namespace {

using namespace delins;

struct GlobalOptions {
    Limits limits;
};

ChannelSpec spec_for_output_word(const std::string& dir, int k, const Word& y) {
    return ChannelSpec::for_output(parse_direction(dir), k, y);
}

int cmd_entropy(const GlobalOptions& g, const std::string& dir, int k, int q,
                const std::string& word, const std::string& side, const std::string& method) {
    const Word w = Word::parse(word, q);
    EntropyReport report{};
    if (side == "in") {
        const ChannelSpec spec = spec_for_output_word(dir, k, w);
        if (method == "closed" || (method == "auto" && k == 1)) {
            if (k != 1) throw std::invalid_argument("no closed form for k=" + std::to_string(k));
            report = spec.direction == Direction::deletion ? input_entropy_1del_closed(w)
                                                           : input_entropy_1ins_closed(w);
        } else {
            report = input_entropy(spec, w, g.limits);
        }
    } else {
        if (method == "closed") throw std::invalid_argument("output entropy has no closed form here");
        const ChannelSpec spec{parse_direction(dir), k, q, static_cast<int>(w.size())};
        report = output_entropy(spec, w, g.limits);
    }
    std::cout << report.to_json() << "\n";
    return 0;
}

int cmd_ball(const GlobalOptions& g, const std::string& dir, int k, int q, const std::string& word) {
    const Word w = Word::parse(word, q);
    const WeightedBall ball = parse_direction(dir) == Direction::deletion
                                  ? deletion_ball(w, k, g.limits)
                                  : insertion_ball(w, k, g.limits);
    std::cout << ball.to_text();
    return 0;
}

int cmd_extremal(const GlobalOptions& g, const std::string& dir, int k, int q, int m,
                 std::optional<int> runs, bool exhaustive) {
    const Direction direction = parse_direction(dir);
    std::optional<ExtremalResult> lo, hi;
    if (exhaustive) {
        const int n = direction == Direction::deletion ? m + k : m - k;
        const ChannelSpec spec{direction, k, q, n};
        auto pair = exhaustive_extremizers(spec, runs, g.limits);
        lo = std::move(pair.first);
        hi = std::move(pair.second);
    } else if (k == 1 && direction == Direction::deletion) {
        if (runs) {
            lo = min_1del_fixed_runs(q, m, *runs, g.limits);
            hi = max_1del_fixed_runs(q, m, *runs, g.limits);
        } else {
            auto pair = global_extrema_1del(q, m + 1, g.limits);
            lo = std::move(pair.first);
            hi = std::move(pair.second);
        }
    } else if (k == 1 && direction == Direction::insertion) {
        auto pair = runs ? extrema_1ins_fixed_runs(q, m, *runs, g.limits)
                         : global_extrema_1ins(q, m - 1, g.limits);
        lo = std::move(pair.first);
        hi = std::move(pair.second);
    } else if (k == 2 && direction == Direction::deletion && !runs) {
        if (q != 2) throw std::invalid_argument("double-deletion minimum is stated for q=2");
        lo = min_2del(m, g.limits);
    } else {
        throw std::invalid_argument("no closed form for this configuration; pass --exhaustive");
    }

    std::cout << "{\"min\":" << lo->to_json();
    if (hi) std::cout << ",\"max\":" << hi->to_json();
    std::cout << "}\n";
    return 0;
}

int cmd_average(const GlobalOptions& g, const std::string& dir, int n, int q, bool direct) {
    const AverageReport report = parse_direction(dir) == Direction::deletion
                                     ? avg_1del(n, q, direct, g.limits)
                                     : avg_1ins(n, q, direct, g.limits);
    std::cout << report.to_json() << "\n";
    return 0;
}

int cmd_figure(int q, int n_min, int n_max, const std::string& out_path) {
    const std::string csv = figure_csv(figure_table(n_min, n_max, q));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << csv;
    if (!out.good()) throw std::runtime_error("failed writing output file: " + out_path);
    return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, int max_m) {
    const verify::SuiteResult result = verify::run_suite(suite, max_m, g.limits);
    std::cout << result.summary() << "\n";
    return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact input/output entropies of fixed-count deletion/insertion channels"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--max-space", g.limits.max_space, "word enumeration cap (q^m)")
        ->capture_default_str();
    app.add_option("--max-ball", g.limits.max_ball, "ball size cap")->capture_default_str();
    app.add_option("--threads", g.limits.threads, "workers for exhaustive scans")
        ->capture_default_str();

    std::string dir = "del", side = "in", method = "auto", word, suite, out_path;
    int k = 1, q = 2, m = 0, n = 0, n_min = 2, n_max = 100, max_m = 6;
    std::optional<int> runs;
    bool exhaustive = false, direct = false;

    auto* entropy = app.add_subcommand("entropy", "input (or output) entropy of one word");
    entropy->fallthrough();
    entropy->add_option("--dir", dir, "channel direction")->required()
        ->check(CLI::IsMember({"del", "ins"}));
    entropy->add_option("--k", k, "error count")->required()->check(CLI::NonNegativeNumber);
    entropy->add_option("--q", q, "alphabet size")->required();
    entropy->add_option("--word", word, "the word, as digits")->required();
    entropy->add_option("--side", side, "which entropy")->check(CLI::IsMember({"in", "out"}));
    entropy->add_option("--method", method, "closed form or enumeration")
        ->check(CLI::IsMember({"auto", "closed", "enum"}));

    auto* ball = app.add_subcommand("ball", "weighted insertion/deletion ball of one word");
    ball->fallthrough();
    ball->add_option("--dir", dir, "channel direction")->required()
        ->check(CLI::IsMember({"del", "ins"}));
    ball->add_option("--k", k, "error count")->required()->check(CLI::NonNegativeNumber);
    ball->add_option("--q", q, "alphabet size")->required();
    ball->add_option("--word", word, "the center word")->required();

    auto* extremal = app.add_subcommand("extremal", "extremal input entropies over a word family");
    extremal->fallthrough();
    extremal->add_option("--dir", dir, "channel direction")->required()
        ->check(CLI::IsMember({"del", "ins"}));
    extremal->add_option("--k", k, "error count")->required()->check(CLI::PositiveNumber);
    extremal->add_option("--q", q, "alphabet size")->required();
    extremal->add_option("--m", m, "channel output length")->required()->check(CLI::PositiveNumber);
    auto* runs_opt = extremal->add_option("--runs", "restrict to words with this many runs")
        ->check(CLI::PositiveNumber);
    extremal->add_flag("--exhaustive", exhaustive, "scan the family instead of closed forms");

    auto* average = app.add_subcommand("average", "average input entropy at length n");
    average->fallthrough();
    average->add_option("--q", q, "alphabet size")->required();
    average->add_option("--n", n, "transmitted length")->required();
    average->add_option("--dir", dir, "channel direction")->check(CLI::IsMember({"del", "ins"}));
    average->add_flag("--direct", direct, "also compute the direct expectation");

    auto* figure = app.add_subcommand("figure", "CSV of min/max/avg/lower-bound curves (1-del)");
    figure->fallthrough();
    int fig_q = 2;
    figure->add_option("--q", fig_q, "alphabet size")->capture_default_str();
    figure->add_option("--n-min", n_min, "first n")->capture_default_str();
    figure->add_option("--n-max", n_max, "last n")->capture_default_str();
    figure->add_option("--out", out_path, "output CSV path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--suite", suite, "suite name")->required()
        ->check(CLI::IsMember({"normalization", "duality", "extremal", "average", "appendix"}));
    verify_cmd->add_option("--max-m", max_m, "largest word length in the grid")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << std::flush;
        return 2;
    }

    try {
        if (runs_opt->count() > 0) runs = runs_opt->as<int>();
        if (entropy->parsed()) return cmd_entropy(g, dir, k, q, word, side, method);
        if (ball->parsed()) return cmd_ball(g, dir, k, q, word);
        if (extremal->parsed()) return cmd_extremal(g, dir, k, q, m, runs, exhaustive);
        if (average->parsed()) return cmd_average(g, dir, n, q, direct);
        if (figure->parsed()) return cmd_figure(fig_q, n_min, n_max, out_path);
        if (verify_cmd->parsed()) return cmd_verify(g, suite, max_m);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
