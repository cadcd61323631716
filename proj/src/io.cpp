#include "pgcurve/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "pgcurve/errors.hpp"

namespace pg {

std::string format_double(double v, int precision) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void write_csv(std::ostream& os, const SampleTable& table, int precision) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            raise(Errc::InvalidArgument, "write_csv: row width does not match header");
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_double(row[c], precision);
        }
        os << '\n';
    }
}

SampleTable read_csv(std::istream& is) {
    SampleTable table;
    std::string line;
    if (!std::getline(is, line))
        raise(Errc::InvalidArgument, "read_csv: missing header");

    const auto split = [](const std::string& text) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(text);
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (!text.empty() && text.back() == ',')
            cells.emplace_back();
        return cells;
    };

    table.columns = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != table.columns.size())
            raise(Errc::InvalidArgument, "read_csv: row width does not match header");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            const char* begin = cell.c_str();
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin || *end != '\0')
                raise(Errc::InvalidArgument, "read_csv: malformed number '" + cell + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_json(std::ostream& os, const SampleTable& table,
                const nlohmann::ordered_json& meta, int precision) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    auto& samples = doc["samples"];
    samples = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            raise(Errc::InvalidArgument, "write_json: row width does not match header");
        nlohmann::ordered_json obj;
        for (size_t c = 0; c < row.size(); ++c) {
            // Round through the CSV formatter so both writers emit the same
            // decimal values at a given precision.
            obj[table.columns[c]] = std::strtod(format_double(row[c], precision).c_str(), nullptr);
        }
        samples.push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

} // namespace pg
