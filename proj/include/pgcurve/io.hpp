#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace pg {

// Column-major-named, row-major-stored numeric table; the common currency of
// every command that emits samples.
struct SampleTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Shortest decimal form with `precision` significant digits ("%.*g");
// precision 17 round-trips doubles exactly.  Negative zero is normalized.
std::string format_double(double v, int precision);

void write_csv(std::ostream& os, const SampleTable& table, int precision);

// Parses a table previously written by write_csv (header + numeric rows).
SampleTable read_csv(std::istream& is);

// {"meta": ..., "samples": [{column: value, ...}, ...]}.  Values are rounded
// to `precision` significant digits before serialization so the emitted
// bytes match the CSV writer's rounding.
void write_json(std::ostream& os, const SampleTable& table,
                const nlohmann::ordered_json& meta, int precision);

} // namespace pg
