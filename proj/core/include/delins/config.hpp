#ifndef DELINS_CONFIG_HPP
#define DELINS_CONFIG_HPP

#include <cstdint>

namespace delins {

/// Guard rails for the exhaustive machinery. Every enumeration-backed
/// operation checks these before materializing anything, so oversized
/// requests fail loudly instead of hanging.
struct Limits {
    /// Maximum number of words an enumeration or scan may visit (q^m).
    std::uint64_t max_space = std::uint64_t{1} << 24;
    /// Maximum number of entries a materialized ball may hold.
    std::uint64_t max_ball = std::uint64_t{1} << 20;
    /// Maximum number of extremizer witnesses kept in memory; results
    /// beyond this are truncated (the exact count is still reported).
    std::uint64_t max_witnesses = std::uint64_t{1} << 16;
    /// Worker count for exhaustive scans. Results are independent of it.
    unsigned threads = 1;
};

}  // namespace delins

#endif
