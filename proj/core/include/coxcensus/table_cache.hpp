#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "coxcensus/coset_table.hpp"

namespace coxcensus {

inline constexpr std::string_view kEnumerationStrategy = "hlt-lookahead-v1";

// 64-bit FNV-1a, as 16 hex digits.
std::string content_hash(std::string_view data);

std::string table_cache_key(const Presentation& p, std::span<const Word> subgroup,
                            std::string_view strategy = kEnumerationStrategy);

std::string table_to_json(const CosetTable& t);
// Throws ParseError on malformed input and std::invalid_argument when the
// table does not belong to the presentation.
CosetTable table_from_json(std::string_view text, std::shared_ptr<const Presentation> p);

// Content-addressed directory: <root>/tables/<key>.json and
// <root>/records/<key>.json. Writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root);

  std::optional<std::string> load(std::string_view bucket, std::string_view key) const;
  void store(std::string_view bucket, std::string_view key, std::string_view contents) const;

  std::optional<CosetTable> load_table(std::string_view key, std::shared_ptr<const Presentation> p) const;
  void store_table(std::string_view key, const CosetTable& t) const;

 private:
  std::filesystem::path root_;
};

}  // namespace coxcensus
