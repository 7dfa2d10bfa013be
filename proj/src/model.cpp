#include "skyrank/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace skyrank {

std::string to_string(Direction d) {
    return d == Direction::Min ? "MIN" : "MAX";
}

Direction most_frequent_direction(const PreferenceSpec& p) {
    std::ptrdiff_t balance = 0;  // >0 means more MIN
    for (Direction d : p.dirs) balance += (d == Direction::Min) ? 1 : -1;
    return balance >= 0 ? Direction::Min : Direction::Max;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

std::pair<std::vector<std::string>, PreferenceSpec>
parse_preference_string(const std::string& text) {
    std::vector<std::string> names;
    PreferenceSpec spec;
    std::size_t pos = 0;
    if (trim(text).empty())
        throw ParameterError("empty preference string");
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string item = trim(text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParameterError("preference item '" + item +
                                 "' is not of the form name:MIN|MAX");
        std::string name = trim(item.substr(0, colon));
        std::string dir = trim(item.substr(colon + 1));
        if (name.empty())
            throw ParameterError("preference item '" + item + "' has an empty name");
        if (dir == "MIN")
            spec.dirs.push_back(Direction::Min);
        else if (dir == "MAX")
            spec.dirs.push_back(Direction::Max);
        else
            throw ParameterError("preference direction '" + dir +
                                 "' must be MIN or MAX");
        if (std::find(names.begin(), names.end(), name) != names.end())
            throw ParameterError("attribute '" + name +
                                 "' appears twice in the preference string");
        names.push_back(std::move(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return {std::move(names), std::move(spec)};
}

Dataset Dataset::create(std::vector<std::string> attribute_names,
                        Eigen::MatrixXd values, std::vector<RowId> row_ids) {
    if (static_cast<Eigen::Index>(attribute_names.size()) != values.cols())
        throw ContractError("attribute name count does not match column count");
    if (static_cast<Eigen::Index>(row_ids.size()) != values.rows())
        throw ContractError("row id count does not match row count");
    if (values.size() > 0 && !values.allFinite())
        throw DomainError("dataset contains a non-finite value");
    std::unordered_set<RowId> seen;
    seen.reserve(row_ids.size());
    for (RowId id : row_ids) {
        if (id <= 0)
            throw IntegrityError("row id " + std::to_string(id) +
                                 " is not a positive integer");
        if (!seen.insert(id).second)
            throw IntegrityError("duplicate row id " + std::to_string(id));
    }
    Dataset d;
    d.attribute_names = std::move(attribute_names);
    d.values = std::move(values);
    d.row_ids = std::move(row_ids);
    return d;
}

Dataset Dataset::select_rows(const std::vector<Eigen::Index>& rows) const {
    Dataset out;
    out.attribute_names = attribute_names;
    out.values.resize(static_cast<Eigen::Index>(rows.size()), n_dims());
    out.row_ids.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out.values.row(static_cast<Eigen::Index>(k)) = values.row(rows[k]);
        out.row_ids.push_back(row_ids[static_cast<std::size_t>(rows[k])]);
    }
    return out;
}

Eigen::Index Dataset::find_row(RowId id) const {
    for (std::size_t i = 0; i < row_ids.size(); ++i)
        if (row_ids[i] == id) return static_cast<Eigen::Index>(i);
    return -1;
}

ScoreTable make_score_table(std::vector<std::string> attribute_names,
                            std::vector<ScoreRow> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const ScoreRow& a, const ScoreRow& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.row_id < b.row_id;
              });
    std::unordered_set<RowId> seen;
    seen.reserve(entries.size());
    for (const ScoreRow& e : entries)
        if (!seen.insert(e.row_id).second)
            throw ContractError("row id " + std::to_string(e.row_id) +
                                " scored twice");
    return ScoreTable{std::move(attribute_names), std::move(entries)};
}

}  // namespace skyrank
