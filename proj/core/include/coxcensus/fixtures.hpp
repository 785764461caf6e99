#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxcensus/census.hpp"

namespace coxcensus {

// Per-class expectations; unset fields are not checked. normal_in lists
// groups the kernel must be normal in, not_normal_in groups it must not be.
struct ExpectedClass {
  std::optional<std::string> h1;
  std::optional<bool> admissible;
  std::optional<bool> orientable;
  std::vector<std::string> normal_in;
  std::vector<std::string> not_normal_in;
  std::optional<std::string> type;
  std::optional<std::uint64_t> genus;
  std::optional<std::string> quotient_kind;
  std::optional<std::uint64_t> quotient_order;
  std::optional<std::string> quotient_consistent_with;
  std::string describe() const;
};

// All classes with kernel abelianization h1 form one orbit under
// conjugation in `kind` (or none of them are conjugate, if !conjugate).
struct ExpectedConjugacy {
  std::string kind;
  std::string h1;
  bool conjugate = true;
};

struct FixtureEntry {
  std::string id;
  std::string tier;  // "quick" or "extended"
  std::string check = "census";  // or "geometry"
  std::string family;
  std::string target;
  std::string citation;
  std::optional<std::size_t> class_count;
  std::optional<std::vector<std::string>> h1;  // multiset
  std::optional<std::size_t> admissible_count;
  std::vector<ExpectedClass> classes;
  std::vector<ExpectedConjugacy> conjugacy;
  std::optional<bool> crosscheck_agrees;
};

// Throws ParseError on malformed or empty fixture data.
std::vector<FixtureEntry> parse_fixtures(std::string_view json_text);
std::vector<FixtureEntry> load_fixtures(const std::filesystem::path& path);
std::filesystem::path default_fixtures_path();

struct FixtureCheck {
  std::string entry;
  std::string name;
  std::string citation;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct ReproductionReport {
  std::vector<FixtureCheck> checks;
  std::vector<std::string> resource_failures;  // "<entry>: <message>"
  // 0 all pass, 1 mismatch, 2 resource failure.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

enum class Tier { Quick, Extended, All };
Tier parse_tier(std::string_view s);

// Checks every entry of the tier (or only the listed ids).
ReproductionReport reproduce_paper(std::span<const FixtureEntry> fixtures, Tier tier, const AnalyzeOptions& options,
                                   std::span<const std::string> only = {}, std::ostream* progress = nullptr);

// The geometry lists check on its own.
std::vector<FixtureCheck> check_geometry_lists(const std::string& entry, const std::string& citation);

// Runs the expectations of one entry against a computed record.
std::vector<FixtureCheck> check_record(const FixtureEntry& e, const CensusRecord& r);

}  // namespace coxcensus
