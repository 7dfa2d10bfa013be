#pragma once

#include <string>
#include <vector>

#include "skyrank/model.hpp"

namespace skyrank {

struct SqlAttribute {
    std::string name;
    Direction dir = Direction::Min;
};

/// Generated SQL plus the metadata a caller needs to run or audit it.
struct SqlArtifact {
    std::string text;
    std::vector<std::string> dialect_notes;
    std::string table_name;
    std::vector<SqlAttribute> attributes;
};

/// Self-join NOT EXISTS query selecting exactly the tuples no other tuple
/// dominates; comparison operators follow each attribute's direction.
SqlArtifact emit_skyline_sql(const std::string& table,
                             const std::vector<SqlAttribute>& attrs);

struct CoSkySqlOptions {
    /// Digits for the final ROUND(Score, n); negative emits the raw score.
    int round_digits = 3;
    /// Reproduce the published listing's ideal-point anomaly (MAX aggregate
    /// on the last attribute) instead of the corrected all-MIN ideal.
    bool faithful_ideal = false;
};

/// Common-table-expression pipeline (S, SN, SGini, SW, SP, Ideal, SScore)
/// computing the cosine ranking entirely in SQL. Attributes must already be
/// oriented so that smaller is better (MIN-unified); the skyline block is
/// inlined as NOT EXISTS.
SqlArtifact emit_cosky_sql(const std::string& table,
                           const std::vector<std::string>& attrs,
                           const CoSkySqlOptions& options = {});

/// Minimal "execute query, fetch numeric rows" contract the validation
/// harness uses to run artifacts on any engine.
class SqlExecutor {
public:
    virtual ~SqlExecutor() = default;
    virtual std::vector<std::vector<double>> query(const std::string& sql) = 0;
};

}  // namespace skyrank
