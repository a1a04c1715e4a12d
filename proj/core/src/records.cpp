#include <json.hpp>

#include "delins/average.hpp"
#include "delins/entropy.hpp"
#include "delins/extremal.hpp"

// JSON record emission for the report types. Key order is fixed and number
// formatting is shortest-round-trip, so identical inputs serialize to
// byte-identical records.

namespace delins {

namespace {

using json = nlohmann::ordered_json;

json weight_json(Weight w) {
    if (w <= static_cast<Weight>(UINT64_MAX)) return static_cast<std::uint64_t>(w);
    return weight_str(w);
}

}  // namespace

std::string EntropyReport::to_json() const {
    json j;
    j["bits"] = bits;
    j["method"] = method == EntropyMethod::closed_form ? "closed_form" : "enumerated";
    if (ball_size) {
        j["ball_size"] = *ball_size;
    } else {
        j["ball_size"] = nullptr;
    }
    j["weight_sum"] = weight_sum;
    return j.dump();
}

std::string ExtremalResult::to_json(std::size_t witness_limit) const {
    json j;
    j["bits"] = bits;
    j["direction"] = direction_name(direction);
    j["k"] = k;
    j["q"] = q;
    j["m"] = m;
    if (runs) {
        j["runs"] = *runs;
    } else {
        j["runs"] = nullptr;
    }
    j["method"] = method;
    j["witness_count"] = weight_json(witness_count);
    json list = json::array();
    for (std::size_t i = 0; i < witnesses.size() && i < witness_limit; ++i) {
        list.push_back(witnesses[i].str());
    }
    j["witnesses"] = std::move(list);
    j["witnesses_truncated"] = truncated || witnesses.size() > witness_limit;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

std::string AverageReport::to_json() const {
    json j;
    j["n"] = n;
    j["q"] = q;
    j["direction"] = direction_name(direction);
    j["avg_closed"] = avg_closed;
    if (avg_direct) {
        j["avg_direct"] = *avg_direct;
    } else {
        j["avg_direct"] = nullptr;
    }
    j["lower_bound"] = lower_bound;
    j["min"] = min_bits;
    j["max"] = max_bits;
    return j.dump();
}

}  // namespace delins
