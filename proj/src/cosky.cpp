#include "skyrank/cosky.hpp"

#include <algorithm>
#include <cmath>

#include "skyrank/prefs.hpp"
#include "skyrank/skyline.hpp"

namespace skyrank {

NormalizedSkyline normalize_by_sum(const Eigen::MatrixXd& sky_rows,
                                   std::vector<RowId> row_ids,
                                   const std::vector<std::string>& attr_names) {
    if (sky_rows.rows() == 0)
        throw DegenerateInputError("cannot normalize an empty skyline");
    NormalizedSkyline out;
    out.rows.resize(sky_rows.rows(), sky_rows.cols());
    for (Eigen::Index j = 0; j < sky_rows.cols(); ++j) {
        const double total = sky_rows.col(j).sum();
        if (total == 0.0) {
            const std::string name =
                static_cast<std::size_t>(j) < attr_names.size()
                    ? attr_names[static_cast<std::size_t>(j)]
                    : "#" + std::to_string(j);
            throw DegenerateInputError("attribute '" + name +
                                       "' sums to zero over the skyline");
        }
        out.rows.col(j) = sky_rows.col(j) / total;
    }
    out.row_ids = std::move(row_ids);
    return out;
}

GiniWeights gini_weights(const NormalizedSkyline& ns) {
    if (ns.rows.cols() == 0)
        throw ContractError("no attributes to weight");
    GiniWeights out;
    out.gini = Eigen::VectorXd::Ones(ns.rows.cols()) -
               ns.rows.array().square().colwise().sum().matrix().transpose();
    const double total = out.gini.sum();
    if (total == 0.0) {
        // Zero dispersion everywhere (single skyline row): weight evenly.
        out.w = Eigen::VectorXd::Constant(ns.rows.cols(),
                                          1.0 / static_cast<double>(ns.rows.cols()));
    } else {
        out.w = out.gini / total;
    }
    return out;
}

Eigen::MatrixXd apply_weights(const NormalizedSkyline& ns, const GiniWeights& gw) {
    if (gw.w.size() != ns.rows.cols())
        throw ContractError("weight count does not match attribute count");
    return ns.rows * gw.w.asDiagonal();
}

IdealPoint ideal_point(const Eigen::MatrixXd& v_rows, const PreferenceSpec& unified,
                       Polarity polarity) {
    if (v_rows.rows() == 0)
        throw DegenerateInputError("cannot take extrema of an empty skyline");
    if (unified.size() != v_rows.cols())
        throw ContractError("preference count does not match attribute count");
    IdealPoint out;
    out.polarity = polarity;
    out.coords.resize(v_rows.cols());
    for (Eigen::Index j = 0; j < v_rows.cols(); ++j) {
        const bool take_min =
            (unified.dirs[static_cast<std::size_t>(j)] == Direction::Min) ==
            (polarity == Polarity::Ideal);
        out.coords(j) =
            take_min ? v_rows.col(j).minCoeff() : v_rows.col(j).maxCoeff();
    }
    return out;
}

ScoreTable salton_cosine_scores(const Eigen::MatrixXd& v_rows, const IdealPoint& ideal,
                                const std::vector<RowId>& row_ids,
                                const Eigen::MatrixXd& display_values,
                                const std::vector<std::string>& attr_names) {
    const double ideal_norm = ideal.coords.norm();
    if (ideal_norm == 0.0)
        throw DegenerateInputError("ideal point is the null vector");
    std::vector<ScoreRow> entries;
    entries.reserve(static_cast<std::size_t>(v_rows.rows()));
    for (Eigen::Index i = 0; i < v_rows.rows(); ++i) {
        const double row_norm = v_rows.row(i).norm();
        if (row_norm == 0.0)
            throw DegenerateInputError(
                "row id " + std::to_string(row_ids[static_cast<std::size_t>(i)]) +
                " is the null vector");
        double score;
        if (v_rows.row(i).cwiseEqual(ideal.coords).all()) {
            score = 1.0;  // collinear with itself; avoids FP shortfall at the top
        } else {
            score = v_rows.row(i).dot(ideal.coords) / (row_norm * ideal_norm);
            // The cosine of non-negative vectors lies in [0, 1]; rounding can
            // overshoot by an ulp.
            score = std::clamp(score, 0.0, 1.0);
        }
        ScoreRow row;
        row.row_id = row_ids[static_cast<std::size_t>(i)];
        row.values = display_values.row(i);
        row.score = score;
        entries.push_back(std::move(row));
    }
    return make_score_table(attr_names, std::move(entries));
}

ScoreTable rank_cosky(const Dataset& d, const PreferenceSpec& p,
                      const CoSkyOptions& options) {
    if (d.n_rows() == 0) return make_score_table(d.attribute_names, {});

    const Direction target = most_frequent_direction(p);
    SkylineResult sky = compute_skyline(d, p);
    Dataset members = d.select_rows(sky.member_rows);
    UnifiedDataset unified = unify(members, p, target);
    const PreferenceSpec unified_prefs =
        PreferenceSpec::uniform(d.n_dims(), target);

    NormalizedSkyline ns = normalize_by_sum(unified.dataset.values,
                                            unified.dataset.row_ids,
                                            d.attribute_names);
    GiniWeights gw = gini_weights(ns);
    if (options.manual_weights) {
        if (options.manual_weights->size() != d.n_dims())
            throw ParameterError("manual weight count does not match attribute count");
        const double total = options.manual_weights->sum();
        if (!(total > 0.0))
            throw ParameterError("manual weights must have a positive sum");
        gw.w = *options.manual_weights / total;
    }
    Eigen::MatrixXd weighted = apply_weights(ns, gw);
    IdealPoint ideal = ideal_point(weighted, unified_prefs, Polarity::Ideal);

    // Scores are presented against the original attribute values.
    return salton_cosine_scores(weighted, ideal, ns.row_ids, members.values,
                                d.attribute_names);
}

}  // namespace skyrank
