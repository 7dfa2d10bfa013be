#pragma once

#include "skyrank/deepsky.hpp"
#include "skyrank/model.hpp"

namespace skyrank {

struct BenchRecord {
    std::string method;
    std::int64_t cardinality = 0;
    int dims = 0;
    double wall_seconds = 0.0;
    std::int64_t skyline_size = 0;
    std::string status;  // "ok" or "error: ..."
};

struct BenchSpec {
    std::vector<std::int64_t> sizes;
    std::vector<int> dims;
    std::vector<Method> methods;
    int repeats = 3;
    std::uint64_t seed = 42;
    RankSkyOptions ranksky;
    std::pair<std::int64_t, std::int64_t> value_range{1, 1000};
};

/// For every (size, dims, method) cell: generate independent data under a
/// seed derived from (seed, size, dims), run the ranking once untimed as a
/// warm-up, then report the median wall time of `repeats` timed runs on a
/// monotonic clock. A failing method is recorded as an error cell and the
/// sweep continues.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

/// method,cardinality,dims,wall_seconds,skyline_size,status
std::string write_bench_csv(const std::vector<BenchRecord>& records);

}  // namespace skyrank
