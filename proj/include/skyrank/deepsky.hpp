#pragma once

#include "skyrank/model.hpp"
#include "skyrank/ranksky.hpp"

namespace skyrank {

enum class Method { DpIdp, RankSky, CoSky };

/// Throws ParameterError on anything but "dpidp", "ranksky", "cosky".
Method parse_method(const std::string& name);
std::string to_string(Method m);

struct TopKEntry {
    RowId row_id = 0;
    Eigen::RowVectorXd values;
    double score = 0.0;
    int level = 0;
};

/// Entries grouped by ascending level; inside a level, descending score with
/// ascending RowId on ties. Scores are comparable within a level only.
struct TopKResult {
    std::vector<std::string> attribute_names;
    std::vector<TopKEntry> entries;
    int k = 0;
};

/// Ranks the skyline, then strips it and ranks the next layer, until k
/// scored points are collected or the dataset is exhausted. The last layer
/// is truncated so exactly min(k, |dataset|) entries come back.
TopKResult deepsky_topk(const Dataset& d, const PreferenceSpec& p, int k,
                        Method method, const RankSkyOptions& ranksky_options = {});

/// `RowId,<attrs...>,Score,Level` in result order.
std::string write_topk_csv(const TopKResult& result, int precision);

}  // namespace skyrank
