#pragma once

#include "skyrank/model.hpp"

namespace skyrank {

/// Skyline rows unified so every attribute is maximized, in ascending RowId
/// order.
struct SkylineMatrix {
    Eigen::MatrixXd m;  // |S| x n_dims
    std::vector<RowId> row_ids;
};

/// Damped, teleportation-smoothed transition matrix. Every row sums to 1 and
/// every entry is at least (1 - alpha) / |S|.
struct GoogleMatrix {
    Eigen::MatrixXd g;
    double alpha = 0.85;
};

/// Stationary distribution aligned with SkylineMatrix::row_ids: entries are
/// non-negative and sum to 1.
struct ScoreVector {
    Eigen::VectorXd v;
};

/// Computes the skyline and inverts every MIN attribute so all directions
/// become MAX. Requires strictly positive values on MIN attributes.
SkylineMatrix build_skyline_matrix(const Dataset& d, const PreferenceSpec& p);

/// A = M * M^T; symmetric positive semidefinite square matrix of size |S|.
Eigen::MatrixXd gram_square(const SkylineMatrix& m);

/// Divides each row by its own sum. Throws DegenerateInputError on a
/// non-positive row sum.
Eigen::MatrixXd row_stochastic(const Eigen::MatrixXd& a);

/// G = alpha * P + ((1 - alpha) / |S|) * ones. Requires 0 < alpha < 1.
GoogleMatrix google_matrix(const Eigen::MatrixXd& p, double alpha);

/// Power iteration on the left: V <- V * G, L1-renormalized, until the L1
/// distance between consecutive vectors drops below epsilon. Gives up with a
/// ConvergenceError after 1000 steps. Accumulation order is fixed
/// (coefficient-wise products, ascending index) so results are reproducible.
ScoreVector ipl_iterate(const GoogleMatrix& g, double epsilon);

struct RankSkyOptions {
    double alpha = 0.85;
    /// Convergence threshold is 10^-precision.
    int precision = 3;
    /// Apply sum normalization and dispersion weighting to the unified
    /// skyline rows before squaring. Off by default; the plain unified
    /// values feed the pipeline.
    bool normalize_first = false;
};

/// Full pipeline; scores joined back to the original (pre-unification)
/// attribute values, sorted descending.
ScoreTable rank_ranksky(const Dataset& d, const PreferenceSpec& p,
                        const RankSkyOptions& options = {});

}  // namespace skyrank
