#include "skyrank/bench.hpp"

#include <algorithm>
#include <chrono>

#include "skyrank/cosky.hpp"
#include "skyrank/csv.hpp"
#include "skyrank/datagen.hpp"
#include "skyrank/dpidp.hpp"
#include "skyrank/ranksky.hpp"

namespace skyrank {

namespace {

ScoreTable run_method(const Dataset& d, const PreferenceSpec& p, Method m,
                      const RankSkyOptions& options) {
    switch (m) {
        case Method::DpIdp: return rank_dpidp(d, p);
        case Method::RankSky: return rank_ranksky(d, p, options);
        case Method::CoSky: return rank_cosky(d, p);
    }
    throw ParameterError("invalid method value");
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
    if (spec.repeats < 1) throw ParameterError("repeats must be at least 1");
    for (std::int64_t n : spec.sizes)
        if (n < 1) throw ParameterError("bench sizes must be at least 1");

    std::vector<BenchRecord> records;
    for (std::int64_t n : spec.sizes) {
        for (int d : spec.dims) {
            GenSpec gen;
            gen.n = n;
            gen.d = d;
            gen.value_range = {spec.value_range};
            // Cell-specific seed so every (n, d) pair gets its own stream
            // but reruns see identical data.
            gen.seed = splitmix64_at(spec.seed,
                                     static_cast<std::uint64_t>(n) * 1000003u +
                                         static_cast<std::uint64_t>(d));
            Dataset data = generate_independent(gen);
            const PreferenceSpec prefs =
                PreferenceSpec::uniform(data.n_dims(), Direction::Min);

            for (Method m : spec.methods) {
                BenchRecord rec;
                rec.method = to_string(m);
                rec.cardinality = n;
                rec.dims = d;
                try {
                    ScoreTable warmup = run_method(data, prefs, m, spec.ranksky);
                    rec.skyline_size = static_cast<std::int64_t>(warmup.entries.size());
                    std::vector<double> times;
                    times.reserve(static_cast<std::size_t>(spec.repeats));
                    for (int r = 0; r < spec.repeats; ++r) {
                        const auto t0 = std::chrono::steady_clock::now();
                        ScoreTable result = run_method(data, prefs, m, spec.ranksky);
                        const auto t1 = std::chrono::steady_clock::now();
                        (void)result;
                        times.push_back(std::chrono::duration<double>(t1 - t0).count());
                    }
                    std::sort(times.begin(), times.end());
                    rec.wall_seconds = times[times.size() / 2];
                    rec.status = "ok";
                } catch (const Error& e) {
                    rec.wall_seconds = 0.0;
                    rec.skyline_size = 0;
                    rec.status = std::string("error: ") + e.what();
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::string write_bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "method,cardinality,dims,wall_seconds,skyline_size,status\n";
    for (const auto& r : records) {
        out += r.method + "," + std::to_string(r.cardinality) + "," +
               std::to_string(r.dims) + "," + format_value(r.wall_seconds) + "," +
               std::to_string(r.skyline_size) + "," + r.status + "\n";
    }
    return out;
}

}  // namespace skyrank
