#include "fanoquot/catalog.hpp"

#include "fanoquot/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fanoquot {

std::string data_dir() {
  if (const char *e = std::getenv("FANOQUOT_DATA_DIR"); e && *e) return e;
  return FANOQUOT_DATA_DIR;
}

std::string data_path(const std::string &relative) { return data_dir() + "/" + relative; }

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-comment, non-blank lines split on whitespace.
std::vector<std::vector<std::string>> table_rows(const std::string &path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> f;
    for (std::string w; ls >> w;) f.push_back(w);
    rows.push_back(std::move(f));
  }
  return rows;
}

long to_long(const std::string &s, const std::string &where) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception &) {
  }
  throw CatalogError(where + ": expected integer, got '" + s + "'");
}

int bracket_balance(const std::string &s) {
  int d = 0;
  for (char c : s) d += (c == '[') - (c == ']');
  return d;
}

} // namespace

GroupDefinition parse_group_definition(const std::string &text) {
  GroupDefinition d;
  std::istringstream in(text);
  std::string line;
  std::string pending_name, pending_matrix;
  auto flush = [&] {
    if (pending_name.empty()) return;
    if (bracket_balance(pending_matrix) != 0) throw CatalogError("generator " + pending_name + ": unbalanced brackets");
    try {
      d.generators.push_back(parse_matrix(pending_matrix));
    } catch (const ParseError &e) {
      throw CatalogError("generator " + pending_name + ": " + e.what());
    }
    d.generator_names.push_back(pending_name);
    pending_name.clear();
    pending_matrix.clear();
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("generator ", 0) == 0) {
      flush();
      pending_name = trim(t.substr(10));
      continue;
    }
    if (!pending_name.empty()) {
      pending_matrix += t;
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) throw CatalogError("header line without ':': " + t);
    std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
    if (key == "name") {
      d.name = value;
    } else if (key == "order") {
      d.order = static_cast<std::size_t>(to_long(value, "order"));
    } else if (key == "id") {
      std::istringstream vs(value);
      if (!(vs >> d.id.order >> d.id.id)) throw CatalogError("id: expected 'order id'");
    } else if (key == "source") {
      d.source = value;
    } else if (key == "cubic") {
      d.cubic = value;
    } else if (key == "notes") {
      d.notes = value;
    } else if (key == "relation") {
      std::istringstream vs(value);
      GroupRelation r;
      if (!(vs >> r.word >> r.order) || r.order <= 0) throw CatalogError("relation: expected 'word order'");
      d.relations.push_back(r);
    } else {
      throw CatalogError("unknown header key '" + key + "'");
    }
  }
  flush();
  if (d.name.empty() || d.order == 0 || d.generators.empty()) throw CatalogError("incomplete group definition");
  for (const auto &g : d.generators)
    if (!g.square() || g.rows() != d.generators[0].rows()) throw CatalogError(d.name + ": generators differ in size");
  return d;
}

std::string format_group_definition(const GroupDefinition &d) {
  std::ostringstream s;
  s << "name: " << d.name << "\norder: " << d.order << "\nid: " << d.id.order << " " << d.id.id
    << "\nsource: " << d.source << "\ncubic: " << d.cubic << "\nnotes: " << d.notes << "\n";
  for (const auto &r : d.relations) s << "relation: " << r.word << " " << r.order << "\n";
  for (std::size_t k = 0; k < d.generators.size(); ++k) {
    const MatC &m = d.generators[k];
    s << "\ngenerator " << d.generator_names[k] << "\n[";
    for (int i = 0; i < m.rows(); ++i) {
      s << (i ? ",\n [" : "[");
      for (int j = 0; j < m.cols(); ++j) s << (j ? "," : "") << m(i, j).to_string();
      s << "]";
    }
    s << "]\n";
  }
  return s.str();
}

std::vector<std::string> group_keys() {
  std::vector<std::string> keys;
  for (const auto &e : std::filesystem::directory_iterator(data_path("groups")))
    if (e.path().extension() == ".group") keys.push_back(e.path().stem().string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

GroupDefinition load_group(const std::string &key) {
  auto keys = group_keys();
  if (!std::binary_search(keys.begin(), keys.end(), key)) {
    std::string known;
    for (const auto &k : keys) known += (known.empty() ? "" : ", ") + k;
    throw CatalogError("unknown group '" + key + "' (known: " + known + ")");
  }
  GroupDefinition d = parse_group_definition(read_file(data_path("groups/" + key + ".group")));
  if (d.name != key) throw CatalogError("group file " + key + " declares name " + d.name);
  return d;
}

std::vector<RankRow> load_rank_table(const std::string &path) {
  std::vector<RankRow> rows;
  for (const auto &f : table_rows(path)) {
    if (f.size() != 4) throw CatalogError(path + ": expected 'label order id rank'");
    RankRow r;
    r.label = f[0];
    r.id = {static_cast<std::size_t>(to_long(f[1], path)), static_cast<std::size_t>(to_long(f[2], path))};
    r.rank = static_cast<int>(to_long(f[3], path));
    if (r.rank < 0 || r.rank > 23) throw CatalogError(path + ": rank out of range in row " + r.label);
    rows.push_back(r);
  }
  return rows;
}

std::vector<OverlayRow> load_overlay(const std::string &path) {
  static const std::vector<std::string> allowed{"n2", "N3", "n3", "n31", "n32"};
  std::vector<OverlayRow> rows;
  for (const auto &f : table_rows(path)) {
    if (f.size() != 6) throw CatalogError(path + ": expected 'ambient order id conditions rank tag'");
    OverlayRow r;
    r.ambient = f[0];
    r.id = {static_cast<std::size_t>(to_long(f[1], path)), static_cast<std::size_t>(to_long(f[2], path))};
    if (f[3] != "*") {
      std::istringstream cs(f[3]);
      for (std::string c; std::getline(cs, c, ',');) {
        auto eq = c.find('=');
        if (eq == std::string::npos) throw CatalogError(path + ": bad condition '" + c + "'");
        std::string k = c.substr(0, eq);
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
          throw CatalogError(path + ": unknown invariant '" + k + "'");
        r.conditions[k] = static_cast<int>(to_long(c.substr(eq + 1), path));
      }
    }
    r.rank = static_cast<int>(to_long(f[4], path));
    r.tag = f[5];
    rows.push_back(r);
  }
  return rows;
}

std::map<int, std::vector<long>> load_known_class_table(const std::string &path) {
  std::map<int, std::vector<long>> m;
  for (const auto &f : table_rows(path)) {
    int b2 = static_cast<int>(to_long(f.at(0), path));
    for (std::size_t i = 1; i < f.size(); ++i) {
      long o = to_long(f[i], path);
      if (o <= 0) throw CatalogError(path + ": orders must be positive");
      m[b2].push_back(o);
    }
  }
  return m;
}

KnownClassCatalog load_known_classes() {
  return {load_known_class_table(data_path("vfuj.table")), load_known_class_table(data_path("vk3.table")),
          load_known_class_table(data_path("vkum.table"))};
}

std::vector<FixtureRow> load_fixtures(const std::string &path) {
  std::vector<FixtureRow> rows;
  for (const auto &f : table_rows(path)) {
    if (f.size() != 4) throw CatalogError(path + ": expected 'order id b2 ambient_order'");
    rows.push_back({{static_cast<std::size_t>(to_long(f[0], path)), static_cast<std::size_t>(to_long(f[1], path))},
                    static_cast<int>(to_long(f[2], path)), static_cast<std::size_t>(to_long(f[3], path))});
  }
  return rows;
}

} // namespace fanoquot
