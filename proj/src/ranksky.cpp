#include "skyrank/ranksky.hpp"

#include <cmath>

#include "skyrank/cosky.hpp"
#include "skyrank/prefs.hpp"
#include "skyrank/skyline.hpp"

namespace skyrank {

SkylineMatrix build_skyline_matrix(const Dataset& d, const PreferenceSpec& p) {
    SkylineResult sky = compute_skyline(d, p);
    if (sky.member_rows.empty())
        throw DegenerateInputError("cannot build a skyline matrix from an empty skyline");
    Dataset members = d.select_rows(sky.member_rows);
    UnifiedDataset unified = unify(members, p, Direction::Max);
    SkylineMatrix out;
    out.m = std::move(unified.dataset.values);
    out.row_ids = std::move(unified.dataset.row_ids);
    return out;
}

Eigen::MatrixXd gram_square(const SkylineMatrix& m) {
    return m.m * m.m.transpose();
}

Eigen::MatrixXd row_stochastic(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd p(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double total = a.row(i).sum();
        if (!(total > 0.0))
            throw DegenerateInputError("row " + std::to_string(i) +
                                       " has non-positive sum " +
                                       std::to_string(total));
        p.row(i) = a.row(i) / total;
    }
    return p;
}

GoogleMatrix google_matrix(const Eigen::MatrixXd& p, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("damping factor must lie strictly between 0 and 1, got " +
                             std::to_string(alpha));
    if (p.rows() != p.cols() || p.rows() == 0)
        throw ContractError("stochastic matrix must be square and non-empty");
    GoogleMatrix g;
    g.alpha = alpha;
    const double teleport = (1.0 - alpha) / static_cast<double>(p.rows());
    g.g = alpha * p + Eigen::MatrixXd::Constant(p.rows(), p.cols(), teleport);
    return g;
}

ScoreVector ipl_iterate(const GoogleMatrix& g, double epsilon) {
    if (!(epsilon > 0.0))
        throw ParameterError("epsilon must be positive");
    const Eigen::Index m = g.g.rows();
    constexpr int kMaxIterations = 1000;

    Eigen::RowVectorXd v = Eigen::RowVectorXd::Constant(m, 1.0 / static_cast<double>(m));
    double residual = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::RowVectorXd next = v.lazyProduct(g.g);
        next /= next.cwiseAbs().sum();
        residual = (next - v).cwiseAbs().sum();
        v = next;
        if (residual < epsilon) return ScoreVector{v.transpose()};
    }
    throw ConvergenceError("power iteration did not converge within " +
                               std::to_string(kMaxIterations) +
                               " steps; last residual " + std::to_string(residual),
                           residual);
}

ScoreTable rank_ranksky(const Dataset& d, const PreferenceSpec& p,
                        const RankSkyOptions& options) {
    if (options.precision < 0)
        throw ParameterError("precision must be >= 0");
    if (d.n_rows() == 0) return make_score_table(d.attribute_names, {});

    SkylineMatrix sky = build_skyline_matrix(d, p);
    if (options.normalize_first) {
        NormalizedSkyline ns = normalize_by_sum(sky.m, sky.row_ids, d.attribute_names);
        sky.m = apply_weights(ns, gini_weights(ns));
    }

    Eigen::MatrixXd a = gram_square(sky);
    Eigen::MatrixXd st = row_stochastic(a);
    GoogleMatrix g = google_matrix(st, options.alpha);
    Eigen::VectorXd scores = ipl_iterate(g, std::pow(10.0, -options.precision)).v;

    std::vector<ScoreRow> entries;
    entries.reserve(sky.row_ids.size());
    for (std::size_t k = 0; k < sky.row_ids.size(); ++k) {
        ScoreRow row;
        row.row_id = sky.row_ids[k];
        row.values = d.values.row(d.find_row(row.row_id));
        row.score = scores(static_cast<Eigen::Index>(k));
        entries.push_back(std::move(row));
    }
    return make_score_table(d.attribute_names, std::move(entries));
}

}  // namespace skyrank
