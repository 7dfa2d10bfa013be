#pragma once

#include "skyrank/model.hpp"

namespace skyrank {

/// Skyline membership split of a dataset. Both id lists are sorted ascending.
struct SkylineResult {
    std::vector<RowId> member_ids;
    std::vector<RowId> rest_ids;
    /// Row positions of the members in the source dataset, aligned with
    /// member_ids.
    std::vector<Eigen::Index> member_rows;
};

/// True iff `a` is at least as good as `b` on every attribute under its
/// direction and strictly better on at least one. Irreflexive and
/// antisymmetric by construction.
bool dominates(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b,
               const PreferenceSpec& p);

/// Block-nested-loop skyline with in-window elimination over a
/// monotone-key presorted scan. Equivalent to the NOT-EXISTS formulation:
/// members are exactly the tuples no other tuple dominates.
SkylineResult compute_skyline(const Dataset& d, const PreferenceSpec& p);

/// Skyline restricted to a subset of row positions (positions returned are
/// into the full dataset). Used by the multilevel strip and kept public for
/// callers that maintain their own residual sets.
std::vector<Eigen::Index> skyline_of_rows(const Dataset& d, const PreferenceSpec& p,
                                          const std::vector<Eigen::Index>& rows);

/// Level 0 is the skyline; level i is the skyline of what is left after
/// removing levels 0..i-1. Terminates when the residual is empty, so the
/// levels partition the dataset.
std::vector<SkylineResult> multilevel_strip(const Dataset& d, const PreferenceSpec& p);

}  // namespace skyrank
