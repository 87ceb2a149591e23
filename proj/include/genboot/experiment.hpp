#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "genboot/bootstrap.hpp"

namespace genboot {

struct Table1Config {
    std::filesystem::path data_dir; ///< holds fig1a.dfg and running_example.log
    std::vector<std::size_t> n_values{100, 1000, 10000};
    std::vector<std::size_t> g_values{100, 1000, 10000};
    std::size_t g_fixed = 10000; ///< generations in the n panel
    std::size_t n_fixed = 10000; ///< replicate size in the g panel
    std::size_t m = 100;
    std::size_t k = 2;
    double p = 1.0;
    std::uint64_t seed = 42;
    std::size_t workers = 1;
};

struct Table1Cell {
    std::size_t n = 0;
    std::size_t g = 0;
    GeneralizationEstimate estimate;
    double seconds = 0.0;
};

struct Table1Result {
    std::vector<Table1Cell> by_n; ///< panel (a)
    std::vector<Table1Cell> by_g; ///< panel (b)
};

/// Data directory compiled into the build (the repository's data/).
[[nodiscard]] std::filesystem::path default_data_dir();

/// Bootstrap estimates of the example model against the running-example log
/// over both panels. Each (n, g) cell is seeded from (seed, n, g) and
/// computed once even when it appears in both panels.
[[nodiscard]] Table1Result reproduce_table1(const Table1Config& cfg);

/// Tab-separated two-panel report, 6 decimals. Wall-clock columns are only
/// written when `timing` is set, so reports are otherwise reproducible.
[[nodiscard]] std::string format_table1(const Table1Config& cfg, const Table1Result& result, bool timing);

} // namespace genboot
