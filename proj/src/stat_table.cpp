#include "irg/stat_table.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace irg {
namespace {

bool parses_as_number(const std::string& s) {
    if (s.empty()) return false;
    try {
        std::size_t used = 0;
        (void)std::stod(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

// quoting marks a field as a string, so numeric look-alikes get quoted too
bool needs_quoting(const std::string& s) {
    if (s.empty()) return true;
    return s.find_first_of(",\"\r\n") != std::string::npos || parses_as_number(s);
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Cell parse_unquoted(const std::string& tok) {
    if (looks_like_int(tok)) {
        return static_cast<std::int64_t>(std::stoll(tok));
    }
    try {
        std::size_t used = 0;
        double d = std::stod(tok, &used);
        if (used == tok.size()) return d;
    } catch (...) {
    }
    return tok;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    std::vector<bool> quoted_flags;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"' && cur.empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
        } else if (ch == ',') {
            fields.push_back(was_quoted ? "\x01" + cur : cur);
            cur.clear();
            was_quoted = false;
        } else {
            cur += ch;
        }
    }
    fields.push_back(was_quoted ? "\x01" + cur : cur);
    return fields;
}

}  // namespace

std::string format_cell(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&c)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        std::string s(buf);
        // keep the double/int distinction round-trippable
        if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
        return s;
    }
    const auto& s = std::get<std::string>(c);
    return needs_quoting(s) ? quote(s) : s;
}

void StatTable::set_meta(const std::string& key, const std::string& value) {
    for (auto& kv : metadata) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    metadata.emplace_back(key, value);
}

const std::string* StatTable::find_meta(const std::string& key) const {
    for (const auto& kv : metadata) {
        if (kv.first == key) return &kv.second;
    }
    return nullptr;
}

void StatTable::to_csv(std::ostream& os) const {
    for (const auto& [k, v] : metadata) {
        os << "# " << k << "=" << v << "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ",";
        os << (needs_quoting(columns[i]) ? quote(columns[i]) : columns[i]);
    }
    os << "\n";
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw std::logic_error("StatTable: row width does not match schema");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << format_cell(row[i]);
        }
        os << "\n";
    }
}

StatTable StatTable::from_csv(std::istream& is) {
    StatTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            auto eq = body.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("StatTable: malformed metadata line");
            }
            t.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        auto fields = split_csv_line(line);
        auto strip_marker = [](std::string f) {
            if (!f.empty() && f[0] == '\x01') f.erase(0, 1);
            return f;
        };
        if (!have_header) {
            for (auto& f : fields) t.columns.push_back(strip_marker(f));
            have_header = true;
            continue;
        }
        std::vector<Cell> row;
        for (auto& f : fields) {
            if (!f.empty() && f[0] == '\x01') {
                row.emplace_back(f.substr(1));  // quoted: always a string
            } else {
                row.push_back(parse_unquoted(f));
            }
        }
        if (row.size() != t.columns.size()) {
            throw std::invalid_argument("StatTable: ragged CSV row");
        }
        t.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument("StatTable: missing header");
    return t;
}

nlohmann::json StatTable::to_json() const {
    nlohmann::json j;
    j["columns"] = columns;
    nlohmann::json meta = nlohmann::json::array();
    for (const auto& [k, v] : metadata) meta.push_back({{"key", k}, {"value", v}});
    j["metadata"] = meta;
    nlohmann::json rws = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            std::visit([&r](const auto& v) { r.push_back(v); }, c);
        }
        rws.push_back(std::move(r));
    }
    j["rows"] = rws;
    return j;
}

StatTable StatTable::from_json(const nlohmann::json& j) {
    StatTable t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& kv : j.at("metadata")) {
        t.metadata.emplace_back(kv.at("key").get<std::string>(),
                                kv.at("value").get<std::string>());
    }
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& v : r) {
            if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
            else if (v.is_number_float()) row.emplace_back(v.get<double>());
            else row.emplace_back(v.get<std::string>());
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void StatTable::write_csv_file(const std::string& path) const {
    namespace fs = std::filesystem;
    const std::string tmp = path + ".part";
    try {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("StatTable: cannot open " + tmp);
        to_csv(os);
        os.flush();
        if (!os) throw std::runtime_error("StatTable: write failed for " + tmp);
        os.close();
        fs::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
}

bool operator==(const StatTable& a, const StatTable& b) {
    return a.columns == b.columns && a.rows == b.rows && a.metadata == b.metadata;
}

}  // namespace irg
