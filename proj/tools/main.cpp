#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxcensus/census.hpp"
#include "coxcensus/errors.hpp"
#include "coxcensus/families.hpp"
#include "coxcensus/fixtures.hpp"
#include "coxcensus/integer_matrix.hpp"
#include "coxcensus/presentation.hpp"
#include "coxcensus/smith.hpp"
#include "coxcensus/table_cache.hpp"
#include "coxcensus/todd_coxeter.hpp"

namespace {

using namespace coxcensus;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBudget = 2;
constexpr int kUsage = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  AnalyzeOptions analyze;
  bool json = false;
};

int run_analyze(const Common& c, const std::string& family, const std::string& target) {
  auto rec = analyze(family, target, c.analyze);
  std::cout << (c.json ? to_json(rec) + "\n" : to_text(rec));
  return kOk;
}

int run_reproduce(const Common& c, const std::string& tier, const std::string& fixtures,
                  const std::vector<std::string>& only, bool quiet) {
  auto entries = load_fixtures(fixtures.empty() ? default_fixtures_path() : std::filesystem::path(fixtures));
  auto rep = reproduce_paper(entries, parse_tier(tier), c.analyze, only, quiet ? nullptr : &std::cerr);
  std::cout << (c.json ? rep.to_json() + "\n" : rep.to_text());
  return rep.exit_code();
}

int run_tc(const Common& c, const std::string& file, const std::vector<std::string>& subgroup, bool print_table) {
  auto p = std::make_shared<const Presentation>(parse_presentation(read_input(file)));
  std::vector<Word> h;
  for (const auto& s : subgroup) h.push_back(parse_word(s, *p));
  std::optional<CosetTable> table;
  std::size_t defined = 0, peak = 0;
  bool cached = false;
  std::string key = table_cache_key(*p, h);
  std::optional<ResultCache> cache;
  if (!c.analyze.cache_dir.empty()) {
    cache.emplace(c.analyze.cache_dir);
    table = cache->load_table(key, p);
    cached = table.has_value();
  }
  if (!table) {
    ToddCoxeterOptions opt;
    opt.max_cosets = c.analyze.max_cosets;
    auto r = todd_coxeter(p, h, opt);
    defined = r.total_defined;
    peak = r.peak_live;
    if (!r.closed()) {
      std::cerr << "coset enumeration overflowed " << c.analyze.max_cosets << " cosets (" << defined
                << " defined)\n";
      return kBudget;
    }
    table = std::move(r.table);
    if (cache) cache->store_table(key, *table);
  }
  if (c.json) {
    nlohmann::json j = {{"index", table->index()}, {"cache_key", key}, {"cached", cached}};
    if (!cached) {
      j["total_defined"] = defined;
      j["peak_live"] = peak;
    }
    if (print_table) j["table"] = nlohmann::json::parse(table_to_json(*table));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "index " << table->index() << "\n";
    if (!cached) std::cout << "cosets defined " << defined << ", peak live " << peak << "\n";
    if (print_table) std::cout << table_to_json(*table) << "\n";
  }
  return kOk;
}

int run_snf(const Common& c, const std::string& file) {
  std::istringstream in(read_input(file));
  auto m = read_sparse_matrix(in);
  SnfStats stats;
  auto d = smith_invariant_factors(m, {}, &stats);
  auto inv = cokernel_invariants(m);
  if (c.json) {
    std::vector<std::string> ds;
    for (const auto& x : d) ds.push_back(x.get_str());
    nlohmann::json j = {{"rows", m.rows()},
                        {"cols", m.cols()},
                        {"invariant_factors", ds},
                        {"cokernel", inv.to_string()},
                        {"unit_pivots", stats.unit_pivots},
                        {"other_pivots", stats.other_pivots},
                        {"peak_nonzeros", stats.peak_nonzeros}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "invariant factors";
    for (const auto& x : d) std::cout << " " << x.get_str();
    std::cout << "\ncokernel " << inv.to_string() << "\n";
  }
  return kOk;
}

int run_families(const Common& c) {
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream o;
  o << std::left << std::setw(24) << "group" << std::setw(12) << "geometry" << std::setw(14) << "gram det"
    << "list\n";
  for (const auto& g : listed_groups()) {
    double det = gram_determinant(g.spec.labels);
    auto computed = classify_geometry(g.spec.labels);
    arr.push_back({{"family", g.spec.to_string()},
                   {"geometry", to_string(computed)},
                   {"listed", to_string(g.geometry)},
                   {"gram_determinant", det},
                   {"list", g.list}});
    std::ostringstream d;
    d << std::setprecision(6) << det;
    o << std::setw(24) << g.spec.to_string() << std::setw(12) << to_string(computed) << std::setw(14) << d.str()
      << g.list << "\n";
  }
  std::cout << (c.json ? arr.dump(2) + "\n" : o.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of finite quotients of tetrahedral Coxeter groups"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values");

  Common c;
  app.add_option("--max-cosets", c.analyze.max_cosets, "Coset enumeration limit")->capture_default_str();
  app.add_option("--search-budget", c.analyze.search_budget, "Epimorphism search node limit")
      ->capture_default_str();
  app.add_option("--cache-dir", c.analyze.cache_dir, "Content-addressed result cache");
  app.add_option("--threads", c.analyze.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("--crosscheck-limit", c.analyze.crosscheck_order_limit,
                 "Largest target order for the index-2 subgroup cross-check")
      ->capture_default_str();
  app.add_flag("--json", c.json, "JSON output");
  app.add_flag("--timings", c.analyze.timings, "Record stage timings");

  std::string family, target;
  auto* an = app.add_subcommand("analyze", "Census of one family and target group")->fallthrough();
  an->add_option("family", family, "e.g. Ctau(5,5;2,2;3,3)")->required();
  an->add_option("target", target, "Catalog group, e.g. A5xZ2")->required();

  std::string tier = "quick", fixtures;
  std::vector<std::string> only;
  bool quiet = false;
  auto* rp = app.add_subcommand("reproduce-paper", "Check the fixture expectations")->fallthrough();
  rp->add_option("--tier", tier, "quick, extended or all")->capture_default_str();
  rp->add_option("--fixtures", fixtures, "Fixture file (default: installed data)");
  rp->add_option("--only", only, "Run only these fixture ids");
  rp->add_flag("--quiet", quiet, "No progress lines on stderr");

  std::string tc_file;
  std::vector<std::string> subgroup;
  bool print_table = false;
  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration")->fallthrough();
  tc->add_option("presentation", tc_file, "Presentation file in the DSL, or - for stdin")->required();
  tc->add_option("--subgroup,-H", subgroup, "Subgroup generator words");
  tc->add_flag("--table", print_table, "Print the coset table");

  std::string snf_file;
  auto* snf = app.add_subcommand("snf", "Smith normal form of a sparse matrix file")->fallthrough();
  snf->add_option("matrix", snf_file, "\"rows cols nnz\" then \"r c value\" lines, or - for stdin")->required();

  auto* fam = app.add_subcommand("families", "Listed tetrahedral groups and their geometry")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*an) return run_analyze(c, family, target);
    if (*rp) return run_reproduce(c, tier, fixtures, only, quiet);
    if (*tc) return run_tc(c, tc_file, subgroup, print_table);
    if (*snf) return run_snf(c, snf_file);
    if (*fam) return run_families(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "resource limit in " << e.stage() << ": " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
