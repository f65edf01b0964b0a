#pragma once

// Tabular output shared by the spectrum and current commands: a header
// block of resolved-configuration lines, named columns, and typed cells.
// Numbers are written with the shortest round-trip decimal representation
// (std::to_chars), so CSV emission and re-parsing preserve every value
// bit-exactly. String cells must not contain commas; lists use ';'.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mhmw/errors.hpp"

namespace mhmw {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Table {
    using Cell = std::variant<std::int64_t, double, std::string>;

    std::vector<std::pair<std::string, std::string>> header; // '# key = value' lines
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_header(std::string key, std::string value) {
        header.emplace_back(std::move(key), std::move(value));
    }

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) {
            throw domain_error("Table: row width " + std::to_string(row.size()) +
                               " does not match " + std::to_string(columns.size()) + " columns");
        }
        rows.push_back(std::move(row));
    }

    static std::string format_cell(const Cell& c) {
        if (const auto* i = std::get_if<std::int64_t>(&c)) return format_int(*i);
        if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
        const auto& s = std::get<std::string>(c);
        if (s.find(',') != std::string::npos) {
            throw domain_error("Table: string cell may not contain ',': " + s);
        }
        return s;
    }

    std::string to_csv() const {
        std::ostringstream out;
        for (const auto& [k, v] : header) out << "# " << k << " = " << v << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "") << columns[i];
        }
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << format_cell(row[i]);
            }
            out << "\n";
        }
        return out.str();
    }

    // Structured text mirroring the same fields, one 'key=value' list per row.
    std::string to_txt() const {
        std::ostringstream out;
        for (const auto& [k, v] : header) out << "# " << k << " = " << v << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << "row " << r << ":";
            for (std::size_t i = 0; i < rows[r].size(); ++i) {
                out << " " << columns[i] << "=" << format_cell(rows[r][i]);
            }
            out << "\n";
        }
        return out.str();
    }

    static Cell parse_cell(std::string_view text) {
        {
            std::int64_t i = 0;
            const auto res = std::from_chars(text.data(), text.data() + text.size(), i);
            if (res.ec == std::errc() && res.ptr == text.data() + text.size()) return i;
        }
        {
            double d = 0.0;
            const auto res = std::from_chars(text.data(), text.data() + text.size(), d);
            if (res.ec == std::errc() && res.ptr == text.data() + text.size()) return d;
        }
        return std::string(text);
    }

    static Table from_csv(std::string_view text) {
        Table t;
        std::size_t pos = 0;
        bool have_columns = false;
        while (pos < text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            if (line.empty()) continue;
            if (line.front() == '#') {
                std::string_view body = line.substr(1);
                const auto eq = body.find('=');
                if (eq != std::string_view::npos) {
                    auto trim = [](std::string_view v) {
                        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
                        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
                        return std::string(v);
                    };
                    t.add_header(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
                }
                continue;
            }
            std::vector<std::string_view> fields;
            std::size_t fpos = 0;
            while (true) {
                const auto comma = line.find(',', fpos);
                fields.push_back(line.substr(fpos, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - fpos));
                if (comma == std::string_view::npos) break;
                fpos = comma + 1;
            }
            if (!have_columns) {
                for (auto f : fields) t.columns.emplace_back(f);
                have_columns = true;
            } else {
                std::vector<Cell> row;
                row.reserve(fields.size());
                for (auto f : fields) row.push_back(parse_cell(f));
                t.add_row(std::move(row));
            }
        }
        return t;
    }
};

} // namespace mhmw
