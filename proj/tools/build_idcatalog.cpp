// Builds data/idcatalog (fingerprint -> small-group id) from the permutation
// generators in data/smallgroups.perm and reports fingerprint collisions
// among the ids listed in data/catalog_ids.txt.

#include "fanoquot/identify.hpp"
#include "fanoquot/paths.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace fanoquot;

int main(int argc, char **argv) {
  std::string in_path = argc > 1 ? argv[1] : data_path("smallgroups.perm");
  std::string out_path = argc > 2 ? argv[2] : data_path("idcatalog");
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return 1;
  }
  std::set<SmallGroupId> required;
  {
    std::ifstream ids(data_path("catalog_ids.txt"));
    std::string line;
    while (std::getline(ids, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      SmallGroupId id;
      if (ls >> id.order >> id.id && id.order < kIdentifyOrderLimit) required.insert(id);
    }
  }

  std::map<std::string, std::vector<SmallGroupId>> by_fp;
  std::vector<std::pair<SmallGroupId, std::string>> rows;
  std::string line;
  int bad = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    SmallGroupId id;
    int degree = 0, ngens = 0;
    hs >> id.order >> id.id >> degree >> ngens;
    std::vector<std::vector<int>> gens(ngens, std::vector<int>(degree));
    for (auto &g : gens) {
      std::getline(in, line);
      std::istringstream gs(line);
      for (int &x : g) gs >> x;
    }
    auto res = permutation_group(gens);
    if (res.group->order() != id.order) {
      std::cerr << "order mismatch for " << id.to_string() << ": got " << res.group->order() << "\n";
      ++bad;
      continue;
    }
    std::string fp = fingerprint(*res.group).serialize();
    by_fp[fp].push_back(id);
    rows.emplace_back(id, fp);
  }

  std::ofstream out(out_path);
  out << "# order id fingerprint\n";
  out << "# fingerprint fields: o order; h element-order histogram; k classes; a abelianization invariants;\n";
  out << "# z center order; d derived series orders; s subgroup counts for orders 1..9\n";
  for (const auto &[id, fp] : rows) out << id.order << " " << id.id << " " << fp << "\n";

  int ambiguous_required = 0;
  for (const auto &[fp, ids] : by_fp) {
    if (ids.size() < 2) continue;
    bool hit = false;
    for (const auto &id : ids) hit |= required.count(id) > 0;
    if (!hit) continue;
    ++ambiguous_required;
    std::cerr << "ambiguous:";
    for (const auto &id : ids) std::cerr << " " << id.to_string();
    std::cerr << "\n";
  }
  std::set<SmallGroupId> present;
  for (const auto &r : rows) present.insert(r.first);
  for (const auto &id : required)
    if (!present.count(id)) {
      std::cerr << "missing required id " << id.to_string() << "\n";
      ++bad;
    }
  std::cout << rows.size() << " groups, " << by_fp.size() << " distinct fingerprints, " << ambiguous_required
            << " ambiguous fingerprints touching required ids\n";
  return bad || ambiguous_required ? 2 : 0;
}
