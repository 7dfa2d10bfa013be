#pragma once

#include "skyrank/bitmatrix.hpp"
#include "skyrank/model.hpp"

namespace skyrank {

/// Full dominance relation of a dataset. `m.get(i, j)` is true iff tuple at
/// row position j dominates the tuple at row position i; a tuple with an
/// all-false row is a skyline member.
struct DominanceMatrix {
    BitMatrix m;
    std::vector<RowId> row_ids;              // position -> RowId
    std::vector<Eigen::Index> skyline_rows;  // ascending RowId order
    std::vector<RowId> skyline_ids;
};

DominanceMatrix build_dominance_matrix(const Dataset& d, const PreferenceSpec& p);

/// Transitive reduction of the dominance order (the covering relation),
/// plus the counts the scoring formula needs. `reduced` keeps the
/// orientation of DominanceMatrix::m. Both count vectors are taken from the
/// full relation, not the reduced one.
struct CoverageGraph {
    BitMatrix reduced;
    /// Covering successors per row position (transpose of `reduced` as
    /// adjacency lists), for graph traversal.
    std::vector<std::vector<Eigen::Index>> children;
    /// Per skyline point (aligned with DominanceMatrix::skyline_rows):
    /// how many points it dominates.
    std::vector<Eigen::Index> sky_dom_count;
    /// Per row position: how many skyline points dominate it.
    std::vector<Eigen::Index> idp_count;
};

CoverageGraph transitive_reduction(const DominanceMatrix& dm);

/// lm[s][p] is the vertex count of the shortest covering-graph path from
/// skyline point s (index into skyline_rows) to row position p; 0 when p is
/// not reachable, i.e. not dominated by that skyline point.
struct LmTable {
    std::vector<std::vector<std::int32_t>> lm;
};

LmTable layers_of_minima(const CoverageGraph& cg,
                         const std::vector<Eigen::Index>& skyline_rows);

/// Score(sp) = sum over points p dominated by sp of
/// (1 / lm(p, sp)) * log10(|S| / idp_count(p)).
std::vector<double> dpidp_scores(const LmTable& lm, const CoverageGraph& cg,
                                 const DominanceMatrix& dm);

/// Full pipeline: dominance matrix, covering relation, layers of minima,
/// scores; skyline points joined back to their original attribute values.
ScoreTable rank_dpidp(const Dataset& d, const PreferenceSpec& p);

}  // namespace skyrank
