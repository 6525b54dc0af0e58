#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

// Tabular results with metadata. CSV serialization is RFC-4180 style;
// doubles are written with 17 significant digits so parse(serialize(t)) == t.

namespace irg {

using Cell = std::variant<std::int64_t, double, std::string>;

struct StatTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // Ordered key/value pairs, echoed as "# key=value" comment lines.
    std::vector<std::pair<std::string, std::string>> metadata;

    void set_meta(const std::string& key, const std::string& value);
    const std::string* find_meta(const std::string& key) const;

    void to_csv(std::ostream& os) const;
    static StatTable from_csv(std::istream& is);

    nlohmann::json to_json() const;
    static StatTable from_json(const nlohmann::json& j);

    // Atomic write: serialize to <path>.part, then rename. The partial file
    // is removed if anything fails.
    void write_csv_file(const std::string& path) const;

    friend bool operator==(const StatTable& a, const StatTable& b);
};

std::string format_cell(const Cell& c);

}  // namespace irg
