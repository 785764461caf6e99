#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxcensus/families.hpp"

namespace coxcensus {

struct AnalyzeOptions {
  std::size_t max_cosets = 1'000'000;
  std::uint64_t search_budget = 500'000'000;
  unsigned threads = 1;
  // Compare the classes of a tetrahedral presentation with those of the
  // index-2 subgroup presentation of the matching reflection group. Always
  // done for the unverified transcriptions, otherwise up to this order.
  std::uint64_t crosscheck_order_limit = 400;
  std::uint64_t fingerprint_limit = 5000;
  bool timings = false;
  std::string cache_dir;  // empty: no cache
};

struct QuotientInfo {
  std::string kind;
  std::uint64_t order = 0;
  std::string fingerprint;  // empty when too large to enumerate
  std::vector<std::string> consistent_with;
  friend bool operator==(const QuotientInfo&, const QuotientInfo&) = default;
};

struct ClassRecord {
  std::size_t id = 0;
  std::string fingerprint;
  std::uint64_t members_found = 0;
  std::vector<std::vector<std::uint32_t>> images;
  std::string kernel_h1;
  bool ambient_analysis = false;  // false if the class could not be lifted
  bool admissible = false;
  std::string method_a;
  std::string method_b;
  std::vector<std::string> non_free_local_groups;
  std::vector<std::string> killed_roots;
  bool orientable = false;
  std::vector<std::string> contained_in;
  std::vector<std::string> normal_in;
  std::vector<QuotientInfo> quotients;
  std::optional<std::string> action_type;
  std::optional<int> type_constant;
  std::optional<std::string> type_group;
  std::optional<std::uint64_t> genus;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// Classes of one kernel orbit under conjugation by a lattice group.
struct ConjugacyPartition {
  std::string kind;
  std::vector<std::vector<std::size_t>> orbits;
  friend bool operator==(const ConjugacyPartition&, const ConjugacyPartition&) = default;
};

struct CrossCheck {
  std::string subgroup_of;  // the reflection group whose index-2 subgroup was used
  std::size_t presentation_classes = 0;
  std::size_t subgroup_classes = 0;
  std::vector<std::string> presentation_h1;  // sorted
  std::vector<std::string> subgroup_h1;      // sorted
  bool mismatch = false;
  friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

struct CensusRecord {
  std::string family;
  std::string target;
  std::uint64_t target_order = 0;
  std::string geometry;
  std::string ambient;
  bool transcription_unverified = false;
  std::string class_source;  // "presentation" or "subgroup-presentation"
  std::size_t class_count = 0;
  std::uint64_t raw_solutions = 0;
  std::uint64_t search_nodes = 0;
  std::vector<ClassRecord> classes;
  std::vector<ConjugacyPartition> conjugacy;
  std::optional<CrossCheck> crosscheck;
  std::map<std::string, double> timings;  // only with AnalyzeOptions::timings
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Throws ParseError / std::invalid_argument for bad input and BudgetExceeded
// when a resource limit is hit.
CensusRecord analyze(std::string_view family, std::string_view target, const AnalyzeOptions& options = {});

std::string to_json(const CensusRecord& r, int indent = 2);
CensusRecord census_record_from_json(std::string_view text);
std::string to_text(const CensusRecord& r);

}  // namespace coxcensus
