#include "fanoquot/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fanoquot {

using json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string> &cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
  return out + "\n";
}

/// Left-aligned columns separated by two spaces, no trailing blanks.
std::string aligned(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

json id_json(const Identification &id) {
  json j;
  j["order"] = id.id.order;
  if (id.known)
    j["id"] = id.id.id;
  else
    j["id"] = nullptr;
  return j;
}

json entry_json(const DeformationEntry &e) {
  return json{{"order", e.id.order}, {"id", e.id.id}, {"b2", e.b2}, {"ambient_order", e.ambient_order}};
}

std::string entry_text(const DeformationEntry &e) {
  return "(" + std::to_string(e.id.order) + "," + std::to_string(e.id.id) + ") b2=" + std::to_string(e.b2) +
         " ambient=" + std::to_string(e.ambient_order);
}

std::string family_cell(const FamilyMatch &m) {
  if (!m.b2_listed) return "no-b2";
  return m.matched() ? "match:" + std::to_string(m.matched_order) : "unmatched";
}

json family_json(const FamilyMatch &m) {
  json j;
  j["b2_listed"] = m.b2_listed;
  if (m.matched())
    j["matched_order"] = m.matched_order;
  else
    j["matched_order"] = nullptr;
  return j;
}

} // namespace

OutputFormat parse_output_format(const std::string &s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json" || s == "structured") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

std::string format_set(const std::vector<int> &values) {
  if (values.size() == 1) return std::to_string(values[0]);
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "}";
}

std::string render_table(const TableHeader &h, const std::vector<SubgroupRecord> &rows, OutputFormat f) {
  static const std::vector<std::string> columns{"class", "group", "rank", "n2", "N3", "n3", "n31", "n32", "b2", "pi1"};
  if (f == OutputFormat::Json) {
    json j;
    j["ambient"] = h.ambient;
    j["ambient_order"] = h.ambient_order;
    j["mode"] = h.mode;
    j["rows"] = json::array();
    for (const auto &r : rows) {
      json row;
      row["class"] = r.class_index;
      row["group"] = id_json(r.id);
      row["rank"] = r.rank.candidates;
      row["n2"] = r.inv.n2;
      row["N3"] = r.inv.N3;
      row["n3"] = r.inv.n3;
      row["n31"] = r.inv.n31;
      row["n32"] = r.inv.n32;
      row["b2"] = r.b2;
      row["pi1"] = id_json(r.pi1);
      row["rank_source"] = to_string(r.rank.source);
      if (!r.rank.tag.empty()) row["rank_tag"] = r.rank.tag;
      j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells{columns};
  for (const auto &r : rows)
    cells.push_back({std::to_string(r.class_index), r.id.to_string(), format_set(r.rank.candidates),
                     std::to_string(r.inv.n2), std::to_string(r.inv.N3), std::to_string(r.inv.n3),
                     std::to_string(r.inv.n31), std::to_string(r.inv.n32), format_set(r.b2), r.pi1.to_string()});
  if (f == OutputFormat::Csv) {
    std::string out;
    for (const auto &c : cells) out += csv_line(c);
    return out;
  }
  return "# " + h.ambient + " order " + std::to_string(h.ambient_order) + " mode " + h.mode + "\n" + aligned(cells);
}

std::string render_l3(const Ambient &a, OutputFormat f) {
  const auto &l3 = a.l3;
  if (f == OutputFormat::Json) {
    json j;
    j["ambient"] = a.definition.name;
    j["count"] = l3.size();
    j["generators"] = json::array();
    for (Elem x : l3.generators)
      j["generators"].push_back(json{{"element", x}, {"matrix", to_string(a.group.matrix_c(x))}});
    return j.dump(2) + "\n";
  }
  if (f == OutputFormat::Csv) {
    std::string out = csv_line({"element", "matrix"});
    for (Elem x : l3.generators) out += csv_line({std::to_string(x), to_string(a.group.matrix_c(x))});
    return out;
  }
  std::string out = "# " + a.definition.name + " L3 count " + std::to_string(l3.size()) + "\n";
  for (Elem x : l3.generators) out += std::to_string(x) + "  " + to_string(a.group.matrix_c(x)) + "\n";
  return out;
}

std::string render_obstruction(const ObstructionReport &r, OutputFormat f) {
  if (f == OutputFormat::Json) {
    json j;
    j["rows"] = json::array();
    for (const auto &row : r.rows) {
      json e = entry_json(row.entry);
      e["fujiki"] = family_json(row.fujiki);
      e["k3"] = family_json(row.k3);
      e["kummer"] = family_json(row.kummer);
      e["verdict"] = row.verdict();
      j["rows"].push_back(e);
    }
    auto list = [](const std::vector<DeformationEntry> &v) {
      json a = json::array();
      for (const auto &e : v) a.push_back(entry_json(e));
      return a;
    };
    j["unmatched_fujiki"] = list(r.unmatched_fujiki);
    j["unmatched_k3"] = list(r.unmatched_k3);
    j["unmatched_kummer"] = list(r.unmatched_kummer);
    j["new_candidates"] = list(r.new_candidates);
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells{{"order", "id", "b2", "ambient", "fujiki", "k3", "kummer", "verdict"}};
  for (const auto &row : r.rows)
    cells.push_back({std::to_string(row.entry.id.order), std::to_string(row.entry.id.id), std::to_string(row.entry.b2),
                     std::to_string(row.entry.ambient_order), family_cell(row.fujiki), family_cell(row.k3),
                     family_cell(row.kummer), row.verdict()});
  if (f == OutputFormat::Csv) {
    std::string out;
    for (const auto &c : cells) out += csv_line(c);
    return out;
  }
  std::string out = aligned(cells);
  auto section = [&out](const std::string &title, const std::vector<DeformationEntry> &v) {
    out += "\n# " + title + " (" + std::to_string(v.size()) + ")\n";
    for (const auto &e : v) out += entry_text(e) + "\n";
  };
  section("unmatched by Fujiki classes", r.unmatched_fujiki);
  section("unmatched by Hilbert-square quotients", r.unmatched_k3);
  section("unmatched by Kummer quotients", r.unmatched_kummer);
  section("new candidates", r.new_candidates);
  return out;
}

} // namespace fanoquot
