#pragma once

#include "skyrank/model.hpp"

namespace skyrank {

/// Transform applied to an attribute while unifying preference directions.
enum class AttributeTransform { Identity, Inversion, ComplementSup, ComplementInfSup };

enum class ComplementMode { SupOnly, InfPlusSup };

/// Dataset whose attributes all share one effective direction, together with
/// the per-attribute record of how each column got there.
struct UnifiedDataset {
    Dataset dataset;
    Direction target_direction = Direction::Min;
    std::vector<AttributeTransform> transform_log;
};

/// Replaces column `attr_index` by its reciprocals. Requires strictly
/// positive values; flips the attribute's effective direction while
/// preserving the dominance relation (x -> 1/x is strictly decreasing).
Dataset invert_attribute(const Dataset& d, Eigen::Index attr_index);

/// SupOnly:    x -> max(column) - x
/// InfPlusSup: x -> min(column) + max(column) - x
/// Either flips the attribute's effective direction.
Dataset complement_attribute(const Dataset& d, Eigen::Index attr_index,
                             ComplementMode mode);

/// Inverts every attribute whose direction differs from `target`. Skyline
/// membership is preserved for strictly positive data.
UnifiedDataset unify(const Dataset& d, const PreferenceSpec& p, Direction target);

}  // namespace skyrank
