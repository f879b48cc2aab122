#include "fanoquot/validate.hpp"

#include <algorithm>
#include <sstream>

namespace fanoquot {

namespace {

const MatC *generator_by_name(const GroupDefinition &d, const std::string &name) {
  auto it = std::find(d.generator_names.begin(), d.generator_names.end(), name);
  return it == d.generator_names.end() ? nullptr : &d.generators[it - d.generator_names.begin()];
}

} // namespace

std::vector<ValidationCheck> validate_group(const GroupDefinition &d, const CacheOptions &cache) {
  std::vector<ValidationCheck> out;
  auto add = [&](std::string check, bool ok, std::string detail) {
    out.push_back({d.name, std::move(check), ok, std::move(detail)});
  };

  std::string text = format_group_definition(d);
  try {
    GroupDefinition back = parse_group_definition(text);
    bool same = format_group_definition(back) == text && back.generators == d.generators;
    add("round-trip", same, same ? "" : "text form does not reproduce the definition");
  } catch (const std::exception &e) {
    add("round-trip", false, e.what());
  }

  bool invertible = true;
  for (std::size_t k = 0; k < d.generators.size(); ++k)
    if (determinant(d.generators[k]).is_zero()) {
      add("invertible", false, "generator " + d.generator_names[k] + " is singular");
      invertible = false;
    }
  if (invertible) add("invertible", true, "");
  if (!invertible) return out;

  for (const auto &r : d.relations) {
    std::string label = "relation " + r.word + " has order " + std::to_string(r.order);
    std::optional<MatC> prod;
    std::istringstream ws(r.word);
    bool known = true;
    for (std::string name; std::getline(ws, name, '*');) {
      const MatC *m = generator_by_name(d, name);
      if (!m) {
        known = false;
        break;
      }
      prod = prod ? *prod * *m : *m;
    }
    if (!known || !prod) {
      add("relation", false, label + ": unknown generator");
      continue;
    }
    int conductor = 1;
    for (const auto &c : prod->data()) conductor = common_conductor(conductor, c.conductor());
    const CyclotomicField &f = CyclotomicField::get(conductor);
    try {
      int got = projective_order(to_field(*prod, f), 1000);
      add("relation", got == r.order, label + (got == r.order ? "" : ", found " + std::to_string(got)));
    } catch (const BudgetExceeded &) {
      add("relation", false, label + ", found order above 1000");
    }
  }

  CacheOptions capped = cache;
  capped.generate.order_cap = 2 * d.order;
  try {
    MatrixGroup g = enumerate_group(d.generators, capped);
    add("order", g.order() == d.order,
        "declared " + std::to_string(d.order) + ", enumerated " + std::to_string(g.order()));
    Identification id = identify(g.group());
    bool ok = id.known && id.id == d.id;
    add("id", ok, "declared " + d.id.to_string() + ", identified " + id.to_string());
  } catch (const BudgetExceeded &) {
    add("order", false, "declared " + std::to_string(d.order) + ", enumeration exceeded " + std::to_string(2 * d.order));
  }
  return out;
}

} // namespace fanoquot
