#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "skyrank/model.hpp"

namespace skyrank {

/// Reads a comma-separated file (UTF-8, header row, '.' decimal point) and
/// aligns the preference string to the file's column order. A `RowId` column,
/// when present, supplies the row identifiers; otherwise rows are numbered
/// 1..n in file order.
std::pair<Dataset, PreferenceSpec> load_csv(const std::filesystem::path& path,
                                            const std::string& pref_string);

/// Same parse applied to in-memory text (the file loader delegates here).
std::pair<Dataset, PreferenceSpec> parse_csv(const std::string& text,
                                             const std::string& pref_string,
                                             const std::string& origin = "<memory>");

/// Full-precision CSV: `RowId,<attrs...>` header, values printed with the
/// shortest representation that round-trips to the same double.
std::string write_dataset_csv(const Dataset& d);

/// `RowId,<attrs...>,Score` with scores rounded half-away-from-zero to
/// `precision` digits; attribute values at full precision.
std::string write_score_table(const ScoreTable& table, int precision);

/// Half-away-from-zero decimal rounding used for score output.
std::string format_score(double value, int precision);

/// Shortest round-trip representation of a double.
std::string format_value(double value);

}  // namespace skyrank
