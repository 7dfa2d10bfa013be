#include "skyrank/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace skyrank {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
        auto comma = line.find(',', pos);
        cells.push_back(line.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return cells;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
    return s.substr(b);
}

double parse_double(const std::string& cell, const std::string& origin,
                    std::size_t line_no, const std::string& column) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end)
        throw ParseError(origin + ": line " + std::to_string(line_no) +
                         ", column '" + column + "': cannot parse '" + cell +
                         "' as a number");
    if (!std::isfinite(out))
        throw ParseError(origin + ": line " + std::to_string(line_no) +
                         ", column '" + column + "': non-finite value");
    return out;
}

RowId parse_row_id(const std::string& cell, const std::string& origin,
                   std::size_t line_no) {
    RowId out = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || out <= 0)
        throw ParseError(origin + ": line " + std::to_string(line_no) +
                         ", column 'RowId': '" + cell +
                         "' is not a positive integer");
    return out;
}

}  // namespace

std::pair<Dataset, PreferenceSpec> parse_csv(const std::string& text,
                                             const std::string& pref_string,
                                             const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(origin + ": missing header row");

    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = strip(h);

    Eigen::Index id_col = -1;
    std::vector<std::string> attr_names;
    std::vector<Eigen::Index> attr_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "RowId") {
            if (id_col >= 0)
                throw SchemaError(origin + ": more than one RowId column");
            id_col = static_cast<Eigen::Index>(c);
        } else {
            attr_names.push_back(header[c]);
            attr_cols.push_back(static_cast<Eigen::Index>(c));
        }
    }

    auto [pref_names, parsed_prefs] = parse_preference_string(pref_string);
    if (pref_names.size() != attr_names.size())
        throw SchemaError(origin + ": preference string names " +
                          std::to_string(pref_names.size()) +
                          " attributes but the file has " +
                          std::to_string(attr_names.size()));
    // Align directions to the file's column order.
    PreferenceSpec prefs;
    prefs.dirs.resize(attr_names.size());
    for (std::size_t c = 0; c < attr_names.size(); ++c) {
        auto it = std::find(pref_names.begin(), pref_names.end(), attr_names[c]);
        if (it == pref_names.end())
            throw SchemaError(origin + ": column '" + attr_names[c] +
                              "' has no preference");
        prefs.dirs[c] =
            parsed_prefs.dirs[static_cast<std::size_t>(it - pref_names.begin())];
    }

    std::vector<RowId> ids;
    std::vector<double> data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size())
            throw ParseError(origin + ": line " + std::to_string(line_no) +
                             " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(header.size()));
        for (auto& cell : cells) cell = strip(cell);
        if (id_col >= 0)
            ids.push_back(parse_row_id(cells[static_cast<std::size_t>(id_col)],
                                       origin, line_no));
        else
            ids.push_back(static_cast<RowId>(ids.size() + 1));
        for (std::size_t k = 0; k < attr_cols.size(); ++k)
            data.push_back(parse_double(
                cells[static_cast<std::size_t>(attr_cols[k])], origin, line_no,
                attr_names[k]));
    }

    const Eigen::Index n = static_cast<Eigen::Index>(ids.size());
    const Eigen::Index d = static_cast<Eigen::Index>(attr_names.size());
    Eigen::MatrixXd values(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            values(i, j) = data[static_cast<std::size_t>(i * d + j)];

    return {Dataset::create(std::move(attr_names), std::move(values), std::move(ids)),
            std::move(prefs)};
}

std::pair<Dataset, PreferenceSpec> load_csv(const std::filesystem::path& path,
                                            const std::string& pref_string) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), pref_string, path.string());
}

std::string format_value(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_score(double value, int precision) {
    if (precision < 0) throw ParameterError("score precision must be >= 0");
    const double scale = std::pow(10.0, precision);
    const double rounded = std::round(value * scale) / scale;  // half away from zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, rounded);
    return buf;
}

std::string write_dataset_csv(const Dataset& d) {
    std::string out = "RowId";
    for (const auto& name : d.attribute_names) out += "," + name;
    out += "\n";
    for (Eigen::Index i = 0; i < d.n_rows(); ++i) {
        out += std::to_string(d.row_ids[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < d.n_dims(); ++j)
            out += "," + format_value(d.values(i, j));
        out += "\n";
    }
    return out;
}

std::string write_score_table(const ScoreTable& table, int precision) {
    std::string out = "RowId";
    for (const auto& name : table.attribute_names) out += "," + name;
    out += ",Score\n";
    for (const ScoreRow& e : table.entries) {
        out += std::to_string(e.row_id);
        for (Eigen::Index j = 0; j < e.values.size(); ++j)
            out += "," + format_value(e.values(j));
        out += "," + format_score(e.score, precision);
        out += "\n";
    }
    return out;
}

}  // namespace skyrank
