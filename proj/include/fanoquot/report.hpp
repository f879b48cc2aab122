#pragma once

// Rendering of classification tables, L3 listings and deformation reports
// as aligned text, CSV or JSON. Output depends only on the records, so equal
// inputs give byte-identical reports.

#include "fanoquot/deformation.hpp"
#include "fanoquot/invariants.hpp"

#include <string>
#include <vector>

namespace fanoquot {

enum class OutputFormat { Table, Csv, Json };
/// "table", "csv", "json" (also "structured"); throws std::invalid_argument.
OutputFormat parse_output_format(const std::string &s);

struct TableHeader {
  std::string ambient;
  std::size_t ambient_order = 0;
  std::string mode; // full-sweep, full-group-only, targeted
};

/// "18" for a single value, "{18,19}" otherwise, "{}" when empty.
std::string format_set(const std::vector<int> &values);

std::string render_table(const TableHeader &h, const std::vector<SubgroupRecord> &rows, OutputFormat f);
std::string render_l3(const Ambient &a, OutputFormat f);
std::string render_obstruction(const ObstructionReport &r, OutputFormat f);

} // namespace fanoquot
