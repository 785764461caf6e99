#include "coxcensus/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "coxcensus/abelian_invariants.hpp"
#include "coxcensus/catalog.hpp"
#include "coxcensus/errors.hpp"
#include "coxcensus/families.hpp"
#include "parallel.hpp"

#ifndef COXCENSUS_DATA_DIR
#define COXCENSUS_DATA_DIR "data"
#endif

namespace coxcensus {

using nlohmann::json;

namespace {

template <class T>
void maybe(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

std::string canonical_h1(const std::string& s) { return AbelianInvariants::parse(s).to_string(); }

std::string join(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + "]";
}

}  // namespace

std::string ExpectedClass::describe() const {
  std::vector<std::string> parts;
  if (h1) parts.push_back("h1=" + *h1);
  if (admissible) parts.push_back(*admissible ? "admissible" : "inadmissible");
  if (orientable) parts.push_back(*orientable ? "orientable" : "non-orientable");
  for (const auto& n : normal_in) parts.push_back("normal in " + n);
  for (const auto& n : not_normal_in) parts.push_back("not normal in " + n);
  if (type) parts.push_back("type " + *type);
  if (genus) parts.push_back("genus " + std::to_string(*genus));
  if (quotient_kind) {
    std::string q = *quotient_kind + "/K";
    if (quotient_order) q += " of order " + std::to_string(*quotient_order);
    if (quotient_consistent_with) q += " ~ " + *quotient_consistent_with;
    parts.push_back(q);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

std::vector<FixtureEntry> parse_fixtures(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("fixtures: ") + e.what());
  }
  std::vector<FixtureEntry> out;
  try {
    if (!j.is_object() || !j.contains("entries") || j.at("entries").empty())
      throw ParseError(1, 1, "fixtures: no entries");
    for (const auto& e : j.at("entries")) {
      FixtureEntry f;
      e.at("id").get_to(f.id);
      e.at("tier").get_to(f.tier);
      if (f.tier != "quick" && f.tier != "extended") throw ParseError(1, 1, "fixtures: bad tier for " + f.id);
      e.at("citation").get_to(f.citation);
      if (e.contains("check")) e.at("check").get_to(f.check);
      if (f.check == "census") {
        e.at("family").get_to(f.family);
        e.at("target").get_to(f.target);
      } else if (f.check != "geometry") {
        throw ParseError(1, 1, "fixtures: unknown check '" + f.check + "'");
      }
      maybe(e, "class_count", f.class_count);
      maybe(e, "h1", f.h1);
      if (f.h1)
        for (auto& h : *f.h1) h = canonical_h1(h);
      maybe(e, "admissible_count", f.admissible_count);
      if (e.contains("classes"))
        for (const auto& c : e.at("classes")) {
          ExpectedClass x;
          maybe(c, "h1", x.h1);
          if (x.h1) x.h1 = canonical_h1(*x.h1);
          maybe(c, "admissible", x.admissible);
          maybe(c, "orientable", x.orientable);
          if (c.contains("normal_in")) c.at("normal_in").get_to(x.normal_in);
          if (c.contains("not_normal_in")) c.at("not_normal_in").get_to(x.not_normal_in);
          maybe(c, "type", x.type);
          maybe(c, "genus", x.genus);
          maybe(c, "quotient_kind", x.quotient_kind);
          maybe(c, "quotient_order", x.quotient_order);
          maybe(c, "quotient_consistent_with", x.quotient_consistent_with);
          if (x.quotient_consistent_with) x.quotient_consistent_with = canonical_group_name(*x.quotient_consistent_with);
          f.classes.push_back(std::move(x));
        }
      if (e.contains("conjugacy"))
        for (const auto& c : e.at("conjugacy")) {
          ExpectedConjugacy x;
          c.at("kind").get_to(x.kind);
          x.h1 = canonical_h1(c.at("h1").get<std::string>());
          if (c.contains("conjugate")) c.at("conjugate").get_to(x.conjugate);
          f.conjugacy.push_back(std::move(x));
        }
      maybe(e, "crosscheck_agrees", f.crosscheck_agrees);
      out.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("fixtures: ") + e.what());
  }
  return out;
}

std::vector<FixtureEntry> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open fixtures file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

std::filesystem::path default_fixtures_path() {
  if (const char* dir = std::getenv("COXCENSUS_DATA_DIR")) return std::filesystem::path(dir) / "fixtures.json";
  return std::filesystem::path(COXCENSUS_DATA_DIR) / "fixtures.json";
}

Tier parse_tier(std::string_view s) {
  if (s == "quick") return Tier::Quick;
  if (s == "extended") return Tier::Extended;
  if (s == "all") return Tier::All;
  throw std::invalid_argument("unknown tier '" + std::string(s) + "' (quick, extended, all)");
}

int ReproductionReport::exit_code() const {
  for (const auto& c : checks)
    if (!c.passed) return 1;
  return resource_failures.empty() ? 0 : 2;
}

std::string ReproductionReport::to_text() const {
  std::ostringstream o;
  std::size_t pass = 0;
  for (const auto& c : checks) {
    if (c.passed) ++pass;
    o << (c.passed ? "PASS     " : "MISMATCH ") << c.entry << ": " << c.name;
    if (!c.passed) o << "\n         expected " << c.expected << "\n         computed " << c.actual;
    o << "\n         [" << c.citation << "]\n";
  }
  for (const auto& r : resource_failures) o << "BUDGET   " << r << "\n";
  o << pass << "/" << checks.size() << " checks passed";
  if (!resource_failures.empty()) o << ", " << resource_failures.size() << " entries hit a resource limit";
  o << "\n";
  return o.str();
}

std::string ReproductionReport::to_json() const {
  json j;
  j["checks"] = json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"entry", c.entry},
                           {"check", c.name},
                           {"citation", c.citation},
                           {"expected", c.expected},
                           {"computed", c.actual},
                           {"passed", c.passed}});
  j["resource_failures"] = resource_failures;
  j["exit_code"] = exit_code();
  return j.dump(2);
}

std::vector<FixtureCheck> check_geometry_lists(const std::string& entry, const std::string& citation) {
  std::vector<FixtureCheck> out;
  for (const auto& g : listed_groups()) {
    FixtureCheck c;
    c.entry = entry;
    c.citation = citation + " (list " + g.list + ")";
    c.name = "geometry of " + g.spec.to_string();
    c.expected = to_string(g.geometry);
    // The determinant alone, without the list lookup.
    double det = gram_determinant(g.spec.labels);
    GeometryClass raw = !g.spec.labels.valid()      ? GeometryClass::Invalid
                        : std::abs(det) < 1e-9      ? GeometryClass::Euclidean
                        : det > 0                   ? GeometryClass::Spherical
                                                    : GeometryClass::Hyperbolic;
    c.actual = to_string(raw);
    c.passed = raw == g.geometry && classify_geometry(g.spec.labels) == g.geometry;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

bool class_matches(const ExpectedClass& x, const ClassRecord& c) {
  if (x.h1 && *x.h1 != c.kernel_h1) return false;
  if (x.admissible && *x.admissible != c.admissible) return false;
  if (x.orientable && *x.orientable != c.orientable) return false;
  for (const auto& n : x.normal_in)
    if (std::find(c.normal_in.begin(), c.normal_in.end(), n) == c.normal_in.end()) return false;
  for (const auto& n : x.not_normal_in)
    if (std::find(c.normal_in.begin(), c.normal_in.end(), n) != c.normal_in.end()) return false;
  if (x.type && (!c.action_type || *x.type != *c.action_type)) return false;
  if (x.genus && (!c.genus || *x.genus != *c.genus)) return false;
  if (x.quotient_kind) {
    auto q = std::find_if(c.quotients.begin(), c.quotients.end(),
                          [&](const QuotientInfo& qi) { return qi.kind == *x.quotient_kind; });
    if (q == c.quotients.end()) return false;
    if (x.quotient_order && *x.quotient_order != q->order) return false;
    if (x.quotient_consistent_with &&
        std::find(q->consistent_with.begin(), q->consistent_with.end(), *x.quotient_consistent_with) ==
            q->consistent_with.end())
      return false;
  }
  return true;
}

std::string describe_class(const ClassRecord& c) {
  std::string s = "#" + std::to_string(c.id) + " h1=" + c.kernel_h1 + (c.admissible ? " admissible" : " inadmissible") +
                  (c.orientable ? " orientable" : " non-orientable") + " normal in " + join(c.normal_in);
  if (c.action_type) s += " type " + *c.action_type + " genus " + std::to_string(c.genus.value_or(0));
  for (const auto& q : c.quotients) {
    s += " " + q.kind + "/K=" + std::to_string(q.order);
    if (!q.consistent_with.empty()) s += "~" + q.consistent_with.front();
  }
  return s;
}

// Assigns each expectation a distinct matching class.
bool assign(const std::vector<ExpectedClass>& xs, const std::vector<ClassRecord>& cs, std::size_t i,
            std::vector<char>& used) {
  if (i == xs.size()) return true;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (used[k] || !class_matches(xs[i], cs[k])) continue;
    used[k] = 1;
    if (assign(xs, cs, i + 1, used)) return true;
    used[k] = 0;
  }
  return false;
}

}  // namespace

std::vector<FixtureCheck> check_record(const FixtureEntry& e, const CensusRecord& r) {
  std::vector<FixtureCheck> out;
  auto add = [&](std::string name, std::string expected, std::string actual, bool passed) {
    out.push_back({e.id, r.family + " -> " + r.target + ": " + std::move(name), e.citation, std::move(expected),
                   std::move(actual), passed});
  };
  if (e.class_count)
    add("class count", std::to_string(*e.class_count), std::to_string(r.class_count), *e.class_count == r.class_count);
  if (e.h1) {
    std::vector<std::string> want = *e.h1, got;
    for (const auto& c : r.classes) got.push_back(c.kernel_h1);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    add("kernel abelianizations", join(want), join(got), want == got);
  }
  if (e.admissible_count) {
    auto n = static_cast<std::size_t>(
        std::count_if(r.classes.begin(), r.classes.end(), [](const ClassRecord& c) { return c.admissible; }));
    add("admissible classes", std::to_string(*e.admissible_count), std::to_string(n), n == *e.admissible_count);
  }
  for (const auto& x : e.classes) {
    bool ok = std::any_of(r.classes.begin(), r.classes.end(), [&](const ClassRecord& c) { return class_matches(x, c); });
    std::string actual;
    for (const auto& c : r.classes) actual += (actual.empty() ? "" : "; ") + describe_class(c);
    add("class with " + x.describe(), x.describe(), actual.empty() ? "no classes" : actual, ok);
  }
  if (e.classes.size() > 1) {
    std::vector<char> used(r.classes.size(), 0);
    bool ok = assign(e.classes, r.classes, 0, used);
    add("expected classes are distinct", "a distinct class for each expectation", ok ? "assigned" : "no assignment",
        ok);
  }
  for (const auto& x : e.conjugacy) {
    std::vector<std::size_t> members;
    for (const auto& c : r.classes)
      if (c.kernel_h1 == x.h1) members.push_back(c.id);
    auto part = std::find_if(r.conjugacy.begin(), r.conjugacy.end(),
                             [&](const ConjugacyPartition& p) { return p.kind == x.kind; });
    bool together = false, apart = true;
    if (part != r.conjugacy.end() && members.size() > 1) {
      for (const auto& orb : part->orbits) {
        auto n = std::count_if(orb.begin(), orb.end(), [&](std::size_t id) {
          return std::find(members.begin(), members.end(), id) != members.end();
        });
        if (static_cast<std::size_t>(n) == members.size()) together = true;
        if (n > 1) apart = false;
      }
    }
    std::string name = "kernels with h1 " + x.h1 + (x.conjugate ? " conjugate in " : " not conjugate in ") + x.kind;
    bool ok = part != r.conjugacy.end() && members.size() > 1 && (x.conjugate ? together : apart);
    add(name, x.conjugate ? "one orbit" : "separate orbits",
        part == r.conjugacy.end() ? "no data" : (together ? "one orbit" : apart ? "separate orbits" : "partly merged"),
        ok);
  }
  if (e.crosscheck_agrees) {
    std::string actual = "not run";
    bool agrees = false;
    if (r.crosscheck) {
      agrees = !r.crosscheck->mismatch;
      actual = std::to_string(r.crosscheck->presentation_classes) + " presentation classes " +
               join(r.crosscheck->presentation_h1) + " vs " + std::to_string(r.crosscheck->subgroup_classes) +
               " subgroup classes " + join(r.crosscheck->subgroup_h1);
    }
    add("agrees with the index-2 subgroup presentation", *e.crosscheck_agrees ? "agreement" : "disagreement", actual,
        r.crosscheck && agrees == *e.crosscheck_agrees);
  }
  return out;
}

ReproductionReport reproduce_paper(std::span<const FixtureEntry> fixtures, Tier tier, const AnalyzeOptions& options,
                                   std::span<const std::string> only, std::ostream* progress) {
  std::vector<const FixtureEntry*> selected;
  for (const auto& e : fixtures) {
    if (!only.empty()) {
      if (std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    } else if ((tier == Tier::Quick && e.tier != "quick") || (tier == Tier::Extended && e.tier != "extended")) {
      continue;
    }
    selected.push_back(&e);
  }
  // Entries run in parallel when threads > 1, each on one thread; the report
  // is assembled in fixture order.
  std::vector<std::optional<CensusRecord>> records(selected.size());
  std::vector<std::string> failures(selected.size());
  AnalyzeOptions per_entry = options;
  if (options.threads > 1 && selected.size() > 1) per_entry.threads = 1;
  std::mutex log;
  detail::parallel_for(selected.size(), options.threads, [&](std::size_t i) {
    const auto& e = *selected[i];
    if (e.check != "census") return;
    if (progress) {
      std::lock_guard<std::mutex> lock(log);
      *progress << "running " << e.id << "\n" << std::flush;
    }
    try {
      records[i] = analyze(e.family, e.target, per_entry);
    } catch (const BudgetExceeded& b) {
      failures[i] = b.what();
    }
  });
  ReproductionReport rep;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const auto& e = *selected[i];
    std::vector<FixtureCheck> c;
    if (e.check == "geometry")
      c = check_geometry_lists(e.id, e.citation);
    else if (records[i])
      c = check_record(e, *records[i]);
    else
      rep.resource_failures.push_back(e.id + ": " + failures[i]);
    rep.checks.insert(rep.checks.end(), c.begin(), c.end());
  }
  return rep;
}

}  // namespace coxcensus
