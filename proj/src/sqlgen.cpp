#include "skyrank/sqlgen.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace skyrank {

namespace {

bool is_plain_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

bool is_reserved(const std::string& name) {
    static const std::unordered_set<std::string> kReserved = {
        "SELECT", "FROM",   "WHERE",  "GROUP",  "ORDER",  "BY",     "AND",
        "OR",     "NOT",    "NULL",   "IN",     "AS",     "ON",     "JOIN",
        "TABLE",  "INDEX",  "KEY",    "PRIMARY", "DEFAULT", "CASE",  "WHEN",
        "THEN",   "ELSE",   "END",    "WITH",   "UNION",  "ALL",    "EXISTS",
        "BETWEEN", "LIKE",  "IS",     "DISTINCT", "HAVING", "LIMIT", "OFFSET",
        "CREATE", "DROP",   "INSERT", "UPDATE", "DELETE", "VALUES", "SET",
        "INTO",   "CAST",   "TO",     "DESC",   "ASC",    "INNER",  "OUTER",
        "LEFT",   "RIGHT",  "CROSS",  "CHECK",  "CONSTRAINT"};
    std::string upper(name.size(), '\0');
    std::transform(name.begin(), name.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return kReserved.count(upper) > 0;
}

std::string quote_identifier(const std::string& name) {
    if (name.empty())
        throw ParameterError("empty SQL identifier");
    for (char c : name)
        if (c == '\0' || c == '\n' || c == '\r')
            throw ParameterError("identifier '" + name +
                                 "' contains characters that cannot be quoted");
    if (is_plain_identifier(name) && !is_reserved(name)) return name;
    std::string out = "\"";
    for (char c : name) {
        out += c;
        if (c == '"') out += c;
    }
    out += "\"";
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// The NOT EXISTS body shared by both emitters: weak dominance on every
// attribute plus strict improvement on at least one.
std::string not_exists_block(const std::string& table,
                             const std::vector<SqlAttribute>& attrs,
                             const std::string& indent) {
    std::vector<std::string> weak, strict;
    for (const auto& a : attrs) {
        const std::string col = quote_identifier(a.name);
        const char* weak_op = a.dir == Direction::Min ? "<=" : ">=";
        const char* strict_op = a.dir == Direction::Min ? "<" : ">";
        weak.push_back("P2." + col + " " + weak_op + " P1." + col);
        strict.push_back("P2." + col + " " + strict_op + " P1." + col);
    }
    std::string out;
    out += indent + "SELECT *\n";
    out += indent + "FROM " + quote_identifier(table) + " AS P1\n";
    out += indent + "WHERE NOT EXISTS (\n";
    out += indent + "    SELECT *\n";
    out += indent + "    FROM " + quote_identifier(table) + " AS P2\n";
    out += indent + "    WHERE (" + join(weak, "\n" + indent + "      AND ") + ")\n";
    out += indent + "      AND (" + join(strict, "\n" + indent + "       OR ") + ")\n";
    out += indent + ")";
    return out;
}

}  // namespace

SqlArtifact emit_skyline_sql(const std::string& table,
                             const std::vector<SqlAttribute>& attrs) {
    if (attrs.empty())
        throw ParameterError("skyline query needs at least one attribute");
    SqlArtifact out;
    out.table_name = table;
    out.attributes = attrs;
    out.text = not_exists_block(table, attrs, "") + ";\n";
    out.dialect_notes = {
        "standard SQL; the only requirement is correlated NOT EXISTS support"};
    return out;
}

SqlArtifact emit_cosky_sql(const std::string& table,
                           const std::vector<std::string>& attrs,
                           const CoSkySqlOptions& options) {
    if (attrs.empty())
        throw ParameterError("ranking query needs at least one attribute");

    SqlArtifact out;
    out.table_name = table;
    for (const auto& a : attrs)
        out.attributes.push_back(SqlAttribute{a, Direction::Min});

    // Derived column names follow the listing convention: one prefix letter
    // per pipeline stage. Refuse inputs where that scheme collides.
    std::unordered_set<std::string> taken{"RowId", "Score"};
    auto derived = [&](char prefix, const std::string& name) {
        return std::string(1, prefix) + name;
    };
    for (const auto& a : attrs) {
        if (!taken.insert(a).second)
            throw ParameterError("attribute '" + a + "' collides with another identifier");
        for (char prefix : {'T', 'N', 'G', 'W', 'P', 'I'})
            if (!taken.insert(derived(prefix, a)).second)
                throw ParameterError("derived name '" + derived(prefix, a) +
                                     "' collides with another identifier");
    }

    std::vector<SqlAttribute> min_attrs;
    for (const auto& a : attrs) min_attrs.push_back(SqlAttribute{a, Direction::Min});

    std::vector<std::string> col, tcol, ncol, gcol, wcol, pcol, icol;
    for (const auto& a : attrs) {
        col.push_back(quote_identifier(a));
        tcol.push_back(quote_identifier(derived('T', a)));
        ncol.push_back(quote_identifier(derived('N', a)));
        gcol.push_back(quote_identifier(derived('G', a)));
        wcol.push_back(quote_identifier(derived('W', a)));
        pcol.push_back(quote_identifier(derived('P', a)));
        icol.push_back(quote_identifier(derived('I', a)));
    }
    const std::size_t n = attrs.size();

    std::string sql;
    sql += "WITH S AS (\n" + not_exists_block(table, min_attrs, "    ") + "\n";

    // Normalization by column sum; NULLIF/COALESCE keeps a degenerate zero
    // sum from dividing by zero.
    sql += "), SN AS (\n    SELECT RowId,\n";
    for (std::size_t j = 0; j < n; ++j)
        sql += "           CAST(" + col[j] + " AS REAL) / COALESCE(NULLIF(" +
               tcol[j] + ", 0), 1) AS " + ncol[j] + (j + 1 < n ? ",\n" : "\n");
    sql += "    FROM S,\n    (\n        SELECT ";
    for (std::size_t j = 0; j < n; ++j)
        sql += "SUM(" + col[j] + ") AS " + tcol[j] + (j + 1 < n ? ",\n               " : "");
    sql += "\n        FROM S\n    ) AS ST\n";

    sql += "), SGini AS (\n    SELECT ";
    for (std::size_t j = 0; j < n; ++j)
        sql += "1 - SUM(" + ncol[j] + " * " + ncol[j] + ") AS " + gcol[j] +
               (j + 1 < n ? ",\n           " : "\n");
    sql += "    FROM SN\n";

    // Weights; a skyline with zero dispersion everywhere (single point)
    // falls back to uniform weights, matching the library pipeline.
    const std::string gini_sum = join(gcol, " + ");
    sql += "), SW AS (\n    SELECT ";
    for (std::size_t j = 0; j < n; ++j)
        sql += "CASE WHEN " + gini_sum + " = 0 THEN 1.0 / " + std::to_string(n) +
               "\n                ELSE " + gcol[j] + " / (" + gini_sum +
               ") END AS " + wcol[j] + (j + 1 < n ? ",\n           " : "\n");
    sql += "    FROM SGini\n";

    sql += "), SP AS (\n    SELECT RowId,\n";
    for (std::size_t j = 0; j < n; ++j)
        sql += "           " + wcol[j] + " * " + ncol[j] + " AS " + pcol[j] +
               (j + 1 < n ? ",\n" : "\n");
    sql += "    FROM SN, SW\n";

    sql += "), Ideal AS (\n    SELECT ";
    for (std::size_t j = 0; j < n; ++j) {
        const bool use_max = options.faithful_ideal && j + 1 == n;
        sql += std::string(use_max ? "MAX(" : "MIN(") + pcol[j] + ") AS " + icol[j] +
               (j + 1 < n ? ",\n           " : "\n");
    }
    sql += "    FROM SP\n";

    std::vector<std::string> dot, p2, i2;
    for (std::size_t j = 0; j < n; ++j) {
        dot.push_back(icol[j] + " * " + pcol[j]);
        p2.push_back(pcol[j] + " * " + pcol[j]);
        i2.push_back(icol[j] + " * " + icol[j]);
    }
    sql += "), SScore AS (\n    SELECT RowId,\n";
    sql += "           (" + join(dot, " + ") + ") /\n";
    sql += "           COALESCE(NULLIF(\n";
    sql += "               SQRT(" + join(p2, " + ") + ") *\n";
    sql += "               SQRT(" + join(i2, " + ") + "), 0), 1)\n";
    sql += "           AS Score\n    FROM Ideal, SP\n)\n";

    sql += "SELECT P.RowId AS RowId, " + join(col, ", ") + ", ";
    if (options.round_digits >= 0)
        sql += "ROUND(Score, " + std::to_string(options.round_digits) + ") AS Score\n";
    else
        sql += "Score\n";
    sql += "FROM S AS P\n";
    sql += "INNER JOIN SScore AS rs ON P.RowId = rs.RowId\n";
    sql += "ORDER BY Score DESC, RowId ASC;\n";

    out.text = std::move(sql);
    out.dialect_notes = {
        "requires common table expressions (WITH)",
        "requires SQRT and ROUND scalar functions",
        "the table must expose a unique numeric RowId column",
        "integer-typed attribute columns rely on CAST(... AS REAL)"};
    if (options.faithful_ideal)
        out.dialect_notes.push_back(
            "reproduction mode: ideal point takes MAX on the last attribute");
    return out;
}

}  // namespace skyrank
