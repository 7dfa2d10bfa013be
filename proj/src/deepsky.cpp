#include "skyrank/deepsky.hpp"

#include <numeric>
#include <unordered_set>

#include "skyrank/cosky.hpp"
#include "skyrank/csv.hpp"
#include "skyrank/dpidp.hpp"
#include "skyrank/skyline.hpp"

namespace skyrank {

Method parse_method(const std::string& name) {
    if (name == "dpidp") return Method::DpIdp;
    if (name == "ranksky") return Method::RankSky;
    if (name == "cosky") return Method::CoSky;
    throw ParameterError("unknown method '" + name +
                         "' (expected dpidp, ranksky or cosky)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::DpIdp: return "dpidp";
        case Method::RankSky: return "ranksky";
        case Method::CoSky: return "cosky";
    }
    throw ParameterError("invalid method value");
}

namespace {

ScoreTable rank_with(const Dataset& d, const PreferenceSpec& p, Method method,
                     const RankSkyOptions& options) {
    switch (method) {
        case Method::DpIdp: return rank_dpidp(d, p);
        case Method::RankSky: return rank_ranksky(d, p, options);
        case Method::CoSky: return rank_cosky(d, p);
    }
    throw ParameterError("invalid method value");
}

}  // namespace

TopKResult deepsky_topk(const Dataset& d, const PreferenceSpec& p, int k,
                        Method method, const RankSkyOptions& ranksky_options) {
    if (k < 1) throw ParameterError("k must be at least 1");

    TopKResult out;
    out.attribute_names = d.attribute_names;
    out.k = k;

    std::vector<Eigen::Index> alive(static_cast<std::size_t>(d.n_rows()));
    std::iota(alive.begin(), alive.end(), Eigen::Index{0});

    int level = 0;
    while (static_cast<int>(out.entries.size()) < k && !alive.empty()) {
        Dataset residual = d.select_rows(alive);
        ScoreTable ranked = rank_with(residual, p, method, ranksky_options);

        std::unordered_set<RowId> taken;
        for (const ScoreRow& e : ranked.entries) {
            taken.insert(e.row_id);
            if (static_cast<int>(out.entries.size()) >= k) continue;
            out.entries.push_back(TopKEntry{e.row_id, e.values, e.score, level});
        }
        // Strip the whole layer, including entries dropped by truncation.
        std::vector<Eigen::Index> next;
        next.reserve(alive.size());
        for (Eigen::Index r : alive)
            if (!taken.count(d.row_ids[static_cast<std::size_t>(r)]))
                next.push_back(r);
        alive = std::move(next);
        ++level;
    }
    return out;
}

std::string write_topk_csv(const TopKResult& result, int precision) {
    std::string out = "RowId";
    for (const auto& name : result.attribute_names) out += "," + name;
    out += ",Score,Level\n";
    for (const TopKEntry& e : result.entries) {
        out += std::to_string(e.row_id);
        for (Eigen::Index j = 0; j < e.values.size(); ++j)
            out += "," + format_value(e.values(j));
        out += "," + format_score(e.score, precision);
        out += "," + std::to_string(e.level);
        out += "\n";
    }
    return out;
}

}  // namespace skyrank
