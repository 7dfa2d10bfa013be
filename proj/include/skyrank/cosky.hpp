#pragma once

#include <optional>

#include "skyrank/model.hpp"

namespace skyrank {

/// Skyline rows scaled so every column sums to 1.
struct NormalizedSkyline {
    Eigen::MatrixXd rows;  // |S| x n_dims
    std::vector<RowId> row_ids;
};

/// Dispersion-derived attribute weights: gini_j = 1 - sum_i u_ij^2, weights
/// proportional to gini and summing to 1. A single-row skyline has zero
/// dispersion everywhere and falls back to uniform weights.
struct GiniWeights {
    Eigen::VectorXd gini;
    Eigen::VectorXd w;
};

enum class Polarity { Ideal, AntiIdeal };

/// Componentwise best (Ideal) or worst (AntiIdeal) of the weighted skyline
/// under the unified preference directions.
struct IdealPoint {
    Eigen::RowVectorXd coords;
    Polarity polarity = Polarity::Ideal;
};

/// u_ij = x_ij / sum of column j over the skyline rows. Throws
/// DegenerateInputError naming the attribute on a zero column sum.
NormalizedSkyline normalize_by_sum(const Eigen::MatrixXd& sky_rows,
                                   std::vector<RowId> row_ids,
                                   const std::vector<std::string>& attr_names = {});

GiniWeights gini_weights(const NormalizedSkyline& ns);

/// v_ij = w_j * u_ij; column j then sums to w_j.
Eigen::MatrixXd apply_weights(const NormalizedSkyline& ns, const GiniWeights& gw);

IdealPoint ideal_point(const Eigen::MatrixXd& v_rows, const PreferenceSpec& unified,
                       Polarity polarity);

/// Cosine of the angle between each weighted row and the ideal point, joined
/// to the given display values and sorted descending. Rows and the ideal
/// must have non-zero norms.
ScoreTable salton_cosine_scores(const Eigen::MatrixXd& v_rows, const IdealPoint& ideal,
                                const std::vector<RowId>& row_ids,
                                const Eigen::MatrixXd& display_values,
                                const std::vector<std::string>& attr_names);

struct CoSkyOptions {
    /// Decision-maker weights overriding the dispersion-derived ones; values
    /// are renormalized to sum 1. One per attribute.
    std::optional<Eigen::VectorXd> manual_weights;
};

/// Full pipeline: unify preferences to the most frequent direction (MIN on a
/// tie), compute the skyline, normalize, weight, score against the ideal
/// point; scores joined back to the original attribute values.
ScoreTable rank_cosky(const Dataset& d, const PreferenceSpec& p,
                      const CoSkyOptions& options = {});

}  // namespace skyrank
