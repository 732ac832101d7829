#pragma once

#include <cstddef>
#include <cstdint>

namespace fgroup {

/// Search and size bounds. Every enumerator and every expansion of a
/// run-length period list honours these.
struct Limits {
    std::uint64_t abelian_target_order = 512;
    std::size_t perm_degree = 7;
    std::size_t perm_generators = 5;
    std::uint64_t max_results = 1'000'000;
    std::size_t smith_periods = 128;
    std::size_t explicit_generators = 4096;
    std::uint64_t regular_degree = 1u << 20;
    std::uint64_t cover_index = 1ull << 40;
    std::size_t tower_depth = 8;
    std::uint64_t scan_ceiling = 1'000'000;
};

} // namespace fgroup
