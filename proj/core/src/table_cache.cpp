#include "coxcensus/table_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxcensus/errors.hpp"

namespace coxcensus {

std::string content_hash(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string table_cache_key(const Presentation& p, std::span<const Word> subgroup, std::string_view strategy) {
  std::string s = serialize(p);
  s += "\nsubgroup";
  for (const auto& w : subgroup) s += " " + format_word(w, p) + ";";
  s += "\n";
  s += strategy;
  return content_hash(s);
}

std::string table_to_json(const CosetTable& t) {
  nlohmann::json j;
  j["presentation"] = serialize(t.presentation());
  j["subgroup"] = t.subgroup_description();
  std::vector<std::string> words;
  for (const auto& w : t.subgroup_words()) words.push_back(format_word(w, t.presentation()));
  j["subgroup_words"] = words;
  j["index"] = t.index();
  j["generators"] = t.generator_count();
  j["action"] = t.raw();
  return j.dump();
}

CosetTable table_from_json(std::string_view text, std::shared_ptr<const Presentation> p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  try {
    if (j.at("presentation").get<std::string>() != serialize(*p))
      throw std::invalid_argument("cached table belongs to a different presentation");
    std::vector<Word> words;
    for (const auto& w : j.at("subgroup_words")) words.push_back(parse_word(w.get<std::string>(), *p));
    auto index = j.at("index").get<std::size_t>();
    auto action = j.at("action").get<std::vector<std::int32_t>>();
    if (action.size() != index * 2 * p->generator_count()) throw std::invalid_argument("cached table has the wrong size");
    for (auto x : action)
      if (x < 0 || static_cast<std::size_t>(x) >= index) throw std::invalid_argument("cached table entry out of range");
    CosetTable t(std::move(p), j.at("subgroup").get<std::string>(), std::move(words), index, std::move(action));
    if (auto d = t.defect()) throw std::invalid_argument("cached table is not closed: " + *d);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

ResultCache::ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<std::string> ResultCache::load(std::string_view bucket, std::string_view key) const {
  std::ifstream in(root_ / bucket / (std::string(key) + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::store(std::string_view bucket, std::string_view key, std::string_view contents) const {
  auto dir = root_ / bucket;
  std::filesystem::create_directories(dir);
  auto final_path = dir / (std::string(key) + ".json");
  auto tmp = dir / (std::string(key) + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << contents;
  }
  std::filesystem::rename(tmp, final_path);
}

std::optional<CosetTable> ResultCache::load_table(std::string_view key, std::shared_ptr<const Presentation> p) const {
  auto text = load("tables", key);
  if (!text) return std::nullopt;
  return table_from_json(*text, std::move(p));
}

void ResultCache::store_table(std::string_view key, const CosetTable& t) const { store("tables", key, table_to_json(t)); }

}  // namespace coxcensus
