#include "doctest.h"

#include "fanoquot/catalog.hpp"
#include "fanoquot/paths.hpp"

#include <filesystem>
#include <fstream>
#include <map>

using namespace fanoquot;

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
  auto p = std::filesystem::temp_directory_path() / ("fanoquot_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

const char *kSmall = "name: tiny\norder: 3\nid: 3 1\nsource: test\ncubic: x0^3\nnotes: none\n"
                     "relation: a 3\n\ngenerator a\n[[0,1],\n [1,0]]\n";

} // namespace

TEST_CASE("every shipped group definition round-trips through its text form") {
  auto keys = group_keys();
  CHECK(keys == std::vector<std::string>{"A35", "A7_perm", "A7_second", "C3_4_A6", "G1944", "L2_11", "M10_first",
                                         "M10_second", "Q8_S3"});
  for (const auto &k : keys) {
    GroupDefinition d = load_group(k);
    CHECK(d.name == k);
    CHECK(!d.source.empty());
    CHECK(d.generators.size() == d.generator_names.size());
    for (const auto &g : d.generators) CHECK(g.rows() == 6);
    std::string text = format_group_definition(d);
    GroupDefinition back = parse_group_definition(text);
    CHECK(format_group_definition(back) == text);
    CHECK(back.generators == d.generators);
    CHECK(back.relations == d.relations);
  }
}

TEST_CASE("declared orders and ids") {
  std::map<std::string, std::pair<std::size_t, std::size_t>> want{
      {"Q8_S3", {48, 29}}, {"A35", {360, 120}}, {"L2_11", {660, 13}}, {"M10_first", {720, 765}},
      {"M10_second", {720, 765}}, {"A7_perm", {2520, 0}}, {"A7_second", {2520, 0}}, {"G1944", {1944, 3559}},
      {"C3_4_A6", {29160, 0}}};
  for (const auto &[k, v] : want) {
    GroupDefinition d = load_group(k);
    CHECK(d.order == v.first);
    CHECK(d.id == SmallGroupId{v.first, v.second});
  }
}

TEST_CASE("group definition parser") {
  GroupDefinition d = parse_group_definition(kSmall);
  CHECK(d.name == "tiny");
  CHECK(d.order == 3);
  REQUIRE(d.relations.size() == 1);
  CHECK(d.relations[0].word == "a");
  CHECK(d.relations[0].order == 3);
  REQUIRE(d.generators.size() == 1);
  CHECK(d.generators[0](0, 1) == Cyclotomic(1));

  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 1\n"), CatalogError);
  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 1\ncolour: red\n"), CatalogError);
  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 2\ngenerator a\n[[1,0],[0,1]"), CatalogError);
  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 2\ngenerator a\n[[1,0],[0,E(]]"), CatalogError);
  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 2\nrelation: a\ngenerator a\n[[1]]"), CatalogError);
  CHECK_THROWS_AS(parse_group_definition("name: x\norder: 2\ngenerator a\n[[1]]\ngenerator b\n[[1,0],[0,1]]"),
                  CatalogError);
  CHECK_THROWS_AS(load_group("no_such_group"), CatalogError);
}

TEST_CASE("rank table") {
  auto rows = load_rank_table(data_path("rkl.table"));
  CHECK(rows.size() > 100);
  for (const auto &r : rows) {
    CHECK(r.rank >= 0);
    CHECK(r.rank <= 23);
  }
  CHECK(rows.front().id == SmallGroupId{1, 1});
  CHECK(rows.front().rank == 0);
  CHECK_THROWS_AS(load_rank_table(temp_file("rk_bad", "1 1 1\n")), CatalogError);
  CHECK_THROWS_AS(load_rank_table(temp_file("rk_range", "1 1 1 24\n")), CatalogError);
}

TEST_CASE("overlay") {
  auto rows = load_overlay(data_path("overlay.table"));
  REQUIRE(!rows.empty());
  for (const auto &r : rows) CHECK(r.ambient == "G1944");
  CHECK(rows[0].conditions == std::map<std::string, int>{{"N3", 1}});
  CHECK_THROWS_AS(load_overlay(temp_file("ov_bad", "G 3 1 q=1 18 t\n")), CatalogError);
  CHECK_THROWS_AS(load_overlay(temp_file("ov_short", "G 3 1 * 18\n")), CatalogError);
}

TEST_CASE("known classes and fixtures") {
  KnownClassCatalog k = load_known_classes();
  CHECK(k.fujiki.at(4) == std::vector<long>{144});
  CHECK(k.k3.at(5) == std::vector<long>{168, 360});
  CHECK(k.kummer.at(7) == std::vector<long>{3, 24, 216, 1944});
  CHECK(!k.k3.count(4));
  CHECK_THROWS_AS(load_known_class_table(temp_file("kc_bad", "5 0\n")), CatalogError);

  auto f = load_fixtures(data_path("fixtures.list"));
  std::map<std::size_t, int> per_ambient;
  for (const auto &r : f) ++per_ambient[r.ambient_order];
  CHECK(per_ambient == std::map<std::size_t, int>{{48, 6}, {360, 14}, {660, 7}, {720, 9}, {1944, 10}, {2520, 15},
                                                  {29160, 43}});
}
