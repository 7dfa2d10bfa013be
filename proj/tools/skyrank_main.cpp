#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skyrank/bench.hpp"
#include "skyrank/cosky.hpp"
#include "skyrank/csv.hpp"
#include "skyrank/datagen.hpp"
#include "skyrank/deepsky.hpp"
#include "skyrank/dpidp.hpp"
#include "skyrank/ranksky.hpp"
#include "skyrank/skyline.hpp"
#include "skyrank/sqlgen.hpp"

namespace {

using namespace skyrank;

std::uint64_t env_or_default_seed() {
    if (const char* env = std::getenv("SKYRANK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParameterError(std::string("SKYRANK_SEED is not an integer: ") + env);
        }
    }
    return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParameterError("cannot open output file '" + out_path + "'");
    out << text;
}

ScoreTable rank_by(const Dataset& d, const PreferenceSpec& p, Method m,
                   const RankSkyOptions& options) {
    switch (m) {
        case Method::DpIdp: return rank_dpidp(d, p);
        case Method::RankSky: return rank_ranksky(d, p, options);
        case Method::CoSky: return rank_cosky(d, p);
    }
    throw ParameterError("invalid method value");
}

struct Cli {
    std::string input;
    std::string prefs;
    std::string method = "cosky";
    std::string out;
    std::string sql_kind;
    std::string table = "T";
    double alpha = 0.85;
    int precision = 3;
    int k = 0;
    std::int64_t rows = 0;
    int dims = 3;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::int64_t lo = 1;
    std::int64_t hi = 1000;
    bool faithful_ideal = false;
    std::vector<std::int64_t> bench_sizes{100, 1000, 10000};
    std::vector<int> bench_dims{3};
    std::vector<std::string> bench_methods{"cosky", "ranksky", "dpidp"};
    int repeats = 3;

    std::uint64_t effective_seed() const {
        return seed_given ? seed : env_or_default_seed();
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Skyline (Pareto-front) queries and rankings over CSV data"};
    app.require_subcommand(1);
    Cli cli;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("input", cli.input, "input CSV file")->required();
        cmd->add_option("--prefs", cli.prefs,
                        "per-attribute directions, e.g. \"Price:MIN,Rating:MAX\"")
            ->required();
        cmd->add_option("--out", cli.out, "write output here instead of stdout");
    };

    CLI::App* sky = app.add_subcommand("skyline", "print the skyline rows");
    add_io(sky);

    CLI::App* rank = app.add_subcommand("rank", "score and sort the skyline");
    add_io(rank);
    rank->add_option("--method", cli.method, "dpidp, ranksky or cosky");
    rank->add_option("--alpha", cli.alpha, "damping factor (ranksky)");
    rank->add_option("--precision", cli.precision, "output digits; also 10^-p convergence");
    rank->add_option("--k", cli.k, "return the top k across skyline levels");

    CLI::App* topk = app.add_subcommand("topk", "multilevel top-k ranking");
    add_io(topk);
    topk->add_option("--method", cli.method, "dpidp, ranksky or cosky");
    topk->add_option("--alpha", cli.alpha, "damping factor (ranksky)");
    topk->add_option("--precision", cli.precision, "output digits; also 10^-p convergence");
    topk->add_option("--k", cli.k, "number of results")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate independent uniform data");
    gen->add_option("--rows", cli.rows, "row count")->required();
    gen->add_option("--dims", cli.dims, "attribute count");
    gen->add_option("--seed", cli.seed, "generator seed (default from SKYRANK_SEED)")
        ->each([&](const std::string&) { cli.seed_given = true; });
    gen->add_option("--lo", cli.lo, "smallest value");
    gen->add_option("--hi", cli.hi, "largest value");
    gen->add_option("--out", cli.out, "write output here instead of stdout");

    CLI::App* sql = app.add_subcommand("emit-sql", "emit a portable SQL query");
    sql->add_option("--kind", cli.sql_kind, "skyline or cosky")->required();
    sql->add_option("--table", cli.table, "table name");
    sql->add_option("--prefs", cli.prefs,
                    "attribute directions; cosky requires all MIN")
        ->required();
    sql->add_option("--precision", cli.precision,
                    "ROUND digits for the cosky score; negative emits raw");
    sql->add_flag("--faithful-ideal", cli.faithful_ideal,
                  "reproduce the published ideal-point anomaly");
    sql->add_option("--out", cli.out, "write output here instead of stdout");

    CLI::App* bench = app.add_subcommand("bench", "time the ranking methods");
    bench->add_option("--rows", cli.bench_sizes, "cardinalities")->delimiter(',');
    bench->add_option("--dims", cli.bench_dims, "dimension counts")->delimiter(',');
    bench->add_option("--methods", cli.bench_methods, "methods to time")->delimiter(',');
    bench->add_option("--repeats", cli.repeats, "timed runs per cell (median reported)");
    bench->add_option("--seed", cli.seed, "base seed (default from SKYRANK_SEED)")
        ->each([&](const std::string&) { cli.seed_given = true; });
    bench->add_option("--alpha", cli.alpha, "damping factor (ranksky)");
    bench->add_option("--precision", cli.precision, "10^-p convergence (ranksky)");
    bench->add_option("--out", cli.out, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sky->parsed()) {
        auto [data, prefs] = load_csv(cli.input, cli.prefs);
        SkylineResult result = compute_skyline(data, prefs);
        emit(write_dataset_csv(data.select_rows(result.member_rows)), cli.out);
        return 0;
    }

    if (rank->parsed() || topk->parsed()) {
        if (topk->parsed() && cli.k < 1)
            throw ParameterError("k must be at least 1");
        auto [data, prefs] = load_csv(cli.input, cli.prefs);
        const Method method = parse_method(cli.method);
        RankSkyOptions options;
        options.alpha = cli.alpha;
        options.precision = cli.precision;
        if (cli.k > 0) {
            TopKResult result = deepsky_topk(data, prefs, cli.k, method, options);
            emit(write_topk_csv(result, cli.precision), cli.out);
        } else {
            ScoreTable table = rank_by(data, prefs, method, options);
            emit(write_score_table(table, cli.precision), cli.out);
        }
        return 0;
    }

    if (gen->parsed()) {
        GenSpec spec;
        spec.n = cli.rows;
        spec.d = cli.dims;
        spec.seed = cli.effective_seed();
        spec.value_range = {{cli.lo, cli.hi}};
        emit(write_dataset_csv(generate_independent(spec)), cli.out);
        return 0;
    }

    if (sql->parsed()) {
        auto [names, prefs] = parse_preference_string(cli.prefs);
        SqlArtifact artifact;
        if (cli.sql_kind == "skyline") {
            std::vector<SqlAttribute> attrs;
            for (std::size_t i = 0; i < names.size(); ++i)
                attrs.push_back(SqlAttribute{names[i], prefs.dirs[i]});
            artifact = emit_skyline_sql(cli.table, attrs);
        } else if (cli.sql_kind == "cosky") {
            for (Direction d : prefs.dirs)
                if (d != Direction::Min)
                    throw ParameterError(
                        "cosky SQL expects MIN-unified attributes; convert MAX "
                        "attributes first (e.g. by inversion)");
            CoSkySqlOptions options;
            options.round_digits = cli.precision;
            options.faithful_ideal = cli.faithful_ideal;
            artifact = emit_cosky_sql(cli.table, names, options);
        } else {
            throw ParameterError("unknown SQL kind '" + cli.sql_kind +
                                 "' (expected skyline or cosky)");
        }
        std::string text = artifact.text;
        if (!artifact.dialect_notes.empty()) {
            text += "-- portability:\n";
            for (const auto& note : artifact.dialect_notes) text += "--   " + note + "\n";
        }
        emit(text, cli.out);
        return 0;
    }

    if (bench->parsed()) {
        BenchSpec spec;
        spec.sizes = cli.bench_sizes;
        spec.dims = cli.bench_dims;
        for (const auto& m : cli.bench_methods) spec.methods.push_back(parse_method(m));
        spec.repeats = cli.repeats;
        spec.seed = cli.effective_seed();
        spec.ranksky.alpha = cli.alpha;
        spec.ranksky.precision = cli.precision;
        emit(write_bench_csv(run_bench(spec)), cli.out);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const skyrank::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "run '" << argv[0] << " --help' for usage\n";
        return e.exit_code();
    } catch (const skyrank::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
