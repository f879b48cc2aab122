#include "fanoquot/cli.hpp"

#include "fanoquot/cache.hpp"
#include "fanoquot/deformation.hpp"
#include "fanoquot/paths.hpp"
#include "fanoquot/report.hpp"
#include "fanoquot/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <thread>

namespace fanoquot {

namespace {

struct CommonOptions {
  std::string group;
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
};

std::string default_cache_dir() {
  if (const char *d = std::getenv("FANOQUOT_CACHE_DIR"); d && *d) return d;
  if (const char *x = std::getenv("XDG_CACHE_HOME"); x && *x) return (std::filesystem::path(x) / "fanoquot").string();
  if (const char *h = std::getenv("HOME"); h && *h) return (std::filesystem::path(h) / ".cache" / "fanoquot").string();
  return "";
}

CacheOptions cache_options(const CommonOptions &c) {
  CacheOptions o;
  if (!c.no_cache) o.dir = c.cache_dir.empty() ? default_cache_dir() : c.cache_dir;
  return o;
}

void add_common(CLI::App *cmd, CommonOptions &c, bool needs_group) {
  auto *g = cmd->add_option("--group", c.group, "catalog key, e.g. L2_11 (see validate-catalog)");
  if (needs_group) g->required();
  cmd->add_option("--format", c.format, "table, csv or json (alias: structured)")
      ->check(CLI::IsMember({"table", "csv", "json", "structured"}));
  cmd->add_option("--cache-dir", c.cache_dir, "directory for enumerated groups");
  cmd->add_flag("--no-cache", c.no_cache, "neither read nor write the group cache");
}

Ambient load_ambient(const CommonOptions &c, std::size_t order_cap = 100000) {
  GroupDefinition d = load_group(c.group);
  CacheOptions co = cache_options(c);
  co.generate.order_cap = order_cap;
  MatrixGroup g = enumerate_group(d.generators, co);
  return Ambient(std::move(d), std::move(g));
}

SweepMode parse_mode(const std::string &m) {
  if (m == "full-sweep") return SweepMode::FullSweep;
  if (m == "full-group-only") return SweepMode::FullGroupOnly;
  return SweepMode::Targeted;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"fanoquot: subgroup invariant tables for automorphism groups of cubic fourfolds",
               "fanoquot"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string mode = "full-sweep";
  std::size_t budget = 1000;
  bool all_subgroups = false, no_resolution = false;
  std::vector<std::string> subgroups;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string fixtures = data_path("fixtures.list");

  auto *table = app.add_subcommand("table", "classification table of subgroup classes");
  add_common(table, common, true);
  table->add_option("--mode", mode, "full-sweep, full-group-only or targeted")
      ->check(CLI::IsMember({"full-sweep", "full-group-only", "targeted"}));
  table->add_option("--budget", budget, "largest ambient order for a full sweep (0 = unlimited)");
  table->add_flag("--all-subgroups", all_subgroups, "also list classes with n2 + n3 = 0");
  table->add_option("--subgroup", subgroups, "targeted subgroup: generator words and matrices, comma separated")
      ->allow_extra_args(false);
  table->add_flag("--no-rank-resolution", no_resolution, "report rank table candidates only");
  table->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto *l3 = app.add_subcommand("detect-l3", "order-3 elements fixing a codimension-2 locus");
  add_common(l3, common, true);

  auto *deform = app.add_subcommand("check-deformation", "numerical obstruction against known classes");
  add_common(deform, common, false);
  deform->add_option("--fixtures", fixtures, "list of 'order id b2 ambient_order' rows");

  auto *fp = app.add_subcommand("fingerprint", "isomorphism fingerprint and small-group id");
  add_common(fp, common, true);
  fp->add_option("--subgroup", subgroups, "subgroup to fingerprint instead of the whole group")->allow_extra_args(false);

  auto *validate = app.add_subcommand("validate-catalog", "check the shipped group definitions");
  add_common(validate, common, false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    OutputFormat format = parse_output_format(common.format);

    if (table->parsed()) {
      if (mode == "targeted" && subgroups.empty()) {
        err << "error: --mode targeted needs at least one --subgroup\n";
        return kExitUsage;
      }
      if (mode != "targeted" && !subgroups.empty()) {
        err << "error: --subgroup is only used with --mode targeted\n";
        return kExitUsage;
      }
      Ambient a = load_ambient(common);
      TableOptions o;
      o.mode = parse_mode(mode);
      o.budget = budget;
      o.all_subgroups = all_subgroups;
      o.resolve_ranks = !no_resolution;
      o.subgroups = subgroups;
      o.threads = threads;
      auto rows = classification_table(a, o);
      out << render_table({a.definition.name, a.group.order(), mode}, rows, format);
      return kExitOk;
    }

    if (l3->parsed()) {
      Ambient a = load_ambient(common);
      out << render_l3(a, format);
      return kExitOk;
    }

    if (deform->parsed()) {
      auto rows = load_fixtures(fixtures);
      auto report = obstruction_report(entries_from_fixtures(rows), load_known_classes());
      out << render_obstruction(report, format);
      return kExitOk;
    }

    if (fp->parsed()) {
      Ambient a = load_ambient(common);
      const FinGroup &g = a.group.group();
      std::vector<Subgroup> subs;
      if (subgroups.empty()) subs.push_back(whole_group(g));
      for (const auto &s : subgroups) subs.push_back(parse_subgroup_spec(a, s));
      std::vector<std::vector<std::string>> rows;
      for (const auto &h : subs) {
        auto sg = as_group(g, h);
        Identification id = identify(*sg.group);
        rows.push_back({id.to_string(), fingerprint(*sg.group).serialize()});
      }
      if (format == OutputFormat::Json) {
        out << "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
          out << (i ? "," : "") << "\n  {\"group\": \"" << rows[i][0] << "\", \"fingerprint\": \"" << rows[i][1]
              << "\"}";
        out << "\n]\n";
      } else {
        if (format == OutputFormat::Csv) out << "group,fingerprint\n";
        for (const auto &r : rows)
          out << (format == OutputFormat::Csv ? "\"" + r[0] + "\"," + r[1] : r[0] + "  " + r[1]) << "\n";
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      std::vector<std::string> keys = common.group.empty() ? group_keys() : std::vector<std::string>{common.group};
      bool all_ok = true;
      CacheOptions co = cache_options(common);
      for (const auto &k : keys) {
        std::vector<ValidationCheck> checks;
        try {
          checks = validate_group(load_group(k), co);
        } catch (const std::exception &e) {
          checks.push_back({k, "parse", false, e.what()});
        }
        for (const auto &c : checks) {
          all_ok = all_ok && c.ok;
          out << (c.ok ? "ok    " : "FAIL  ") << c.group << "  " << c.check;
          if (!c.detail.empty()) out << "  " << c.detail;
          out << "\n";
        }
      }
      return all_ok ? kExitOk : kExitValidation;
    }
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CatalogError &e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const MembershipError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

} // namespace fanoquot
