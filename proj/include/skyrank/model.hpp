#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "skyrank/errors.hpp"

namespace skyrank {

using RowId = std::int64_t;

/// Per-attribute optimization direction.
enum class Direction { Min, Max };

std::string to_string(Direction d);

/// Ordered list of directions, one per attribute.
struct PreferenceSpec {
    std::vector<Direction> dirs;

    Eigen::Index size() const { return static_cast<Eigen::Index>(dirs.size()); }

    static PreferenceSpec uniform(Eigen::Index n, Direction d) {
        return PreferenceSpec{std::vector<Direction>(static_cast<std::size_t>(n), d)};
    }
};

/// Most frequent direction in the spec; Min wins ties.
Direction most_frequent_direction(const PreferenceSpec& p);

/// Parses "name:MIN,name:MAX,..." into (names, directions).
/// Throws ParameterError on grammar violations (usage-level failure).
std::pair<std::vector<std::string>, PreferenceSpec>
parse_preference_string(const std::string& text);

/// A relation: one row per tuple, one column per attribute. Immutable by
/// convention once constructed; every pipeline stage works on copies or
/// read-only references.
struct Dataset {
    std::vector<std::string> attribute_names;
    Eigen::MatrixXd values;  // n_rows x n_dims
    std::vector<RowId> row_ids;

    Eigen::Index n_rows() const { return values.rows(); }
    Eigen::Index n_dims() const { return values.cols(); }

    /// Validating constructor: checks dimension agreement, finiteness and
    /// RowId uniqueness/positivity.
    static Dataset create(std::vector<std::string> attribute_names,
                          Eigen::MatrixXd values, std::vector<RowId> row_ids);

    /// Subset of rows, in the given order.
    Dataset select_rows(const std::vector<Eigen::Index>& rows) const;

    /// Position of a RowId, or -1.
    Eigen::Index find_row(RowId id) const;
};

struct ScoreRow {
    RowId row_id = 0;
    Eigen::RowVectorXd values;
    double score = 0.0;
};

/// Rows with scores, ordered by descending score; ties broken by ascending
/// RowId. Construct through `make_score_table` so the ordering invariant
/// holds on every path.
struct ScoreTable {
    std::vector<std::string> attribute_names;
    std::vector<ScoreRow> entries;
};

/// Sorts entries (score desc, RowId asc), verifies RowId uniqueness.
ScoreTable make_score_table(std::vector<std::string> attribute_names,
                            std::vector<ScoreRow> entries);

}  // namespace skyrank
