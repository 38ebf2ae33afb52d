#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "a4l/errors.hpp"
#include "a4l/time.hpp"

namespace a4l {

struct InvalidTable : Error {
    using Error::Error;
};

enum class ColumnType { String, Int64, Float64, Bool, Timestamp };

inline const char* column_type_name(ColumnType t) {
    switch (t) {
        case ColumnType::String: return "string";
        case ColumnType::Int64: return "int64";
        case ColumnType::Float64: return "float64";
        case ColumnType::Bool: return "bool";
        case ColumnType::Timestamp: return "timestamp";
    }
    return "?";
}

inline std::optional<ColumnType> parse_column_type(const std::string& s) {
    if (s == "string") return ColumnType::String;
    if (s == "int64") return ColumnType::Int64;
    if (s == "float64") return ColumnType::Float64;
    if (s == "bool") return ColumnType::Bool;
    if (s == "timestamp") return ColumnType::Timestamp;
    return std::nullopt;
}

// monostate = null.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool, Timestamp>;

inline bool cell_is_null(const Cell& c) { return std::holds_alternative<std::monostate>(c); }

inline bool cell_matches(const Cell& c, ColumnType t) {
    if (cell_is_null(c)) return true;
    switch (t) {
        case ColumnType::String: return std::holds_alternative<std::string>(c);
        case ColumnType::Int64: return std::holds_alternative<std::int64_t>(c);
        case ColumnType::Float64: return std::holds_alternative<double>(c);
        case ColumnType::Bool: return std::holds_alternative<bool>(c);
        case ColumnType::Timestamp: return std::holds_alternative<Timestamp>(c);
    }
    return false;
}

struct Column {
    std::string name;
    ColumnType type;

    bool operator==(const Column&) const = default;
};

// In-memory columnar-schema table with row-tuple storage. Rows are
// validated against the declared column types on append; any column may
// hold nulls.
class Table {
public:
    Table() = default;
    explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return columns_.size(); }

    std::optional<std::size_t> column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (columns_[i].name == name) return i;
        return std::nullopt;
    }

    const Cell& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

    void append_row(std::vector<Cell> row) {
        if (row.size() != columns_.size())
            throw InvalidTable("row arity " + std::to_string(row.size()) +
                               " does not match column count " + std::to_string(columns_.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!cell_matches(row[i], columns_[i].type))
                throw InvalidTable("cell type mismatch in column '" + columns_[i].name + "'");
        }
        rows_.push_back(std::move(row));
    }

    // Unchecked append for internal transforms that already guarantee shape.
    void append_row_unchecked(std::vector<Cell> row) { rows_.push_back(std::move(row)); }

    bool operator==(const Table&) const = default;

    // Column-major JSON, the wire form served by the results API.
    nlohmann::json to_json() const {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& c : columns_)
            cols.push_back({{"name", c.name}, {"type", column_type_name(c.type)}});
        nlohmann::json data = nlohmann::json::array();
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            nlohmann::json col = nlohmann::json::array();
            for (const auto& row : rows_) col.push_back(cell_to_json(row[c]));
            data.push_back(std::move(col));
        }
        return {{"columns", cols}, {"data", data}, {"row_count", rows_.size()}};
    }

    static Table from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("columns") || !j.contains("data"))
            throw InvalidTable("not a column-major table document");
        std::vector<Column> cols;
        for (const auto& c : j.at("columns")) {
            auto t = parse_column_type(c.at("type").get<std::string>());
            if (!t) throw InvalidTable("unknown column type");
            cols.push_back({c.at("name").get<std::string>(), *t});
        }
        Table table{std::move(cols)};
        const auto& data = j.at("data");
        if (data.size() != table.column_count()) throw InvalidTable("data/column count mismatch");
        std::size_t n = data.empty() ? 0 : data[0].size();
        for (const auto& col : data)
            if (col.size() != n) throw InvalidTable("ragged column data");
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Cell> row;
            row.reserve(table.column_count());
            for (std::size_t c = 0; c < table.column_count(); ++c)
                row.push_back(cell_from_json(data[c][r], table.columns()[c].type));
            table.append_row(std::move(row));
        }
        return table;
    }

    static nlohmann::json cell_to_json(const Cell& cell) {
        if (cell_is_null(cell)) return nullptr;
        if (const auto* s = std::get_if<std::string>(&cell)) return *s;
        if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
        if (const auto* d = std::get_if<double>(&cell)) return *d;
        if (const auto* b = std::get_if<bool>(&cell)) return *b;
        return format_iso8601(std::get<Timestamp>(cell));
    }

    static Cell cell_from_json(const nlohmann::json& v, ColumnType type) {
        if (v.is_null()) return std::monostate{};
        switch (type) {
            case ColumnType::String:
                if (v.is_string()) return v.get<std::string>();
                break;
            case ColumnType::Int64:
                if (v.is_number_integer()) return v.get<std::int64_t>();
                break;
            case ColumnType::Float64:
                if (v.is_number()) return v.get<double>();
                break;
            case ColumnType::Bool:
                if (v.is_boolean()) return v.get<bool>();
                break;
            case ColumnType::Timestamp:
                if (v.is_string()) {
                    auto ts = parse_iso8601(v.get<std::string>());
                    if (ts) return *ts;
                }
                break;
        }
        throw InvalidTable("cell value does not match declared column type");
    }

private:
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
};

// Total order over cells used wherever deterministic output order is
// required (merge keys, group labels). Nulls sort first, then by type.
inline int compare_cells(const Cell& a, const Cell& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    int lt = a < b ? -1 : 0;
    return lt != 0 ? lt : (b < a ? 1 : 0);
}

inline std::string cell_to_display(const Cell& cell) {
    if (cell_is_null(cell)) return "null";
    if (const auto* s = std::get_if<std::string>(&cell)) return *s;
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        return buf;
    }
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return format_iso8601(std::get<Timestamp>(cell));
}

}  // namespace a4l
