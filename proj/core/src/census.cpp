#include "coxcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coxcensus/abelianization.hpp"
#include "coxcensus/action_analysis.hpp"
#include "coxcensus/catalog.hpp"
#include "coxcensus/errors.hpp"
#include "coxcensus/table_cache.hpp"
#include "parallel.hpp"

namespace coxcensus {

using nlohmann::json;

void to_json(json& j, const QuotientInfo& q) {
  j = json{{"kind", q.kind}, {"order", q.order}, {"fingerprint", q.fingerprint}, {"consistent_with", q.consistent_with}};
}
void from_json(const json& j, QuotientInfo& q) {
  j.at("kind").get_to(q.kind);
  j.at("order").get_to(q.order);
  j.at("fingerprint").get_to(q.fingerprint);
  j.at("consistent_with").get_to(q.consistent_with);
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
void optional_from(const json& j, const char* key, std::optional<T>& out) {
  if (j.at(key).is_null())
    out.reset();
  else
    out = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const ClassRecord& c) {
  j = json{{"id", c.id},
           {"fingerprint", c.fingerprint},
           {"members_found", c.members_found},
           {"images", c.images},
           {"kernel_h1", c.kernel_h1},
           {"ambient_analysis", c.ambient_analysis},
           {"admissible", c.admissible},
           {"method_a", c.method_a},
           {"method_b", c.method_b},
           {"non_free_local_groups", c.non_free_local_groups},
           {"killed_roots", c.killed_roots},
           {"orientable", c.orientable},
           {"contained_in", c.contained_in},
           {"normal_in", c.normal_in},
           {"quotients", c.quotients},
           {"action_type", optional_json(c.action_type)},
           {"type_constant", optional_json(c.type_constant)},
           {"type_group", optional_json(c.type_group)},
           {"genus", optional_json(c.genus)}};
}
void from_json(const json& j, ClassRecord& c) {
  j.at("id").get_to(c.id);
  j.at("fingerprint").get_to(c.fingerprint);
  j.at("members_found").get_to(c.members_found);
  j.at("images").get_to(c.images);
  j.at("kernel_h1").get_to(c.kernel_h1);
  j.at("ambient_analysis").get_to(c.ambient_analysis);
  j.at("admissible").get_to(c.admissible);
  j.at("method_a").get_to(c.method_a);
  j.at("method_b").get_to(c.method_b);
  j.at("non_free_local_groups").get_to(c.non_free_local_groups);
  j.at("killed_roots").get_to(c.killed_roots);
  j.at("orientable").get_to(c.orientable);
  j.at("contained_in").get_to(c.contained_in);
  j.at("normal_in").get_to(c.normal_in);
  j.at("quotients").get_to(c.quotients);
  optional_from(j, "action_type", c.action_type);
  optional_from(j, "type_constant", c.type_constant);
  optional_from(j, "type_group", c.type_group);
  optional_from(j, "genus", c.genus);
}

void to_json(json& j, const ConjugacyPartition& p) { j = json{{"kind", p.kind}, {"orbits", p.orbits}}; }
void from_json(const json& j, ConjugacyPartition& p) {
  j.at("kind").get_to(p.kind);
  j.at("orbits").get_to(p.orbits);
}

void to_json(json& j, const CrossCheck& c) {
  j = json{{"subgroup_of", c.subgroup_of},         {"presentation_classes", c.presentation_classes},
           {"subgroup_classes", c.subgroup_classes}, {"presentation_h1", c.presentation_h1},
           {"subgroup_h1", c.subgroup_h1},           {"mismatch", c.mismatch}};
}
void from_json(const json& j, CrossCheck& c) {
  j.at("subgroup_of").get_to(c.subgroup_of);
  j.at("presentation_classes").get_to(c.presentation_classes);
  j.at("subgroup_classes").get_to(c.subgroup_classes);
  j.at("presentation_h1").get_to(c.presentation_h1);
  j.at("subgroup_h1").get_to(c.subgroup_h1);
  j.at("mismatch").get_to(c.mismatch);
}

std::string to_json(const CensusRecord& r, int indent) {
  json j{{"family", r.family},
         {"target", r.target},
         {"target_order", r.target_order},
         {"geometry", r.geometry},
         {"ambient", r.ambient},
         {"transcription_unverified", r.transcription_unverified},
         {"class_source", r.class_source},
         {"class_count", r.class_count},
         {"raw_solutions", r.raw_solutions},
         {"search_nodes", r.search_nodes},
         {"classes", r.classes},
         {"conjugacy", r.conjugacy},
         {"crosscheck", r.crosscheck ? json(*r.crosscheck) : json(nullptr)}};
  if (!r.timings.empty()) j["timings"] = r.timings;
  return j.dump(indent);
}

CensusRecord census_record_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  try {
    CensusRecord r;
    j.at("family").get_to(r.family);
    j.at("target").get_to(r.target);
    j.at("target_order").get_to(r.target_order);
    j.at("geometry").get_to(r.geometry);
    j.at("ambient").get_to(r.ambient);
    j.at("transcription_unverified").get_to(r.transcription_unverified);
    j.at("class_source").get_to(r.class_source);
    j.at("class_count").get_to(r.class_count);
    j.at("raw_solutions").get_to(r.raw_solutions);
    j.at("search_nodes").get_to(r.search_nodes);
    j.at("classes").get_to(r.classes);
    j.at("conjugacy").get_to(r.conjugacy);
    optional_from(j, "crosscheck", r.crosscheck);
    if (j.contains("timings")) j.at("timings").get_to(r.timings);
    if (r.class_count != r.classes.size()) throw ParseError(1, 1, "class_count does not match the class list");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Word> translate(std::span<const Word> words, const Presentation& from, const Presentation& to) {
  std::vector<int> map(from.generator_count() + 1, 0);
  for (std::size_t g = 1; g <= from.generator_count(); ++g) {
    auto t = to.find_generator(from.generator_name(static_cast<int>(g)));
    if (!t) throw std::logic_error("translate: generator missing from the ambient group");
    map[g] = *t;
  }
  std::vector<Word> out;
  for (const auto& w : words) {
    std::vector<int> l;
    for (int x : w) l.push_back(x > 0 ? map[static_cast<std::size_t>(x)] : -map[static_cast<std::size_t>(-x)]);
    out.emplace_back(std::move(l));
  }
  return out;
}

std::vector<std::string> sorted_h1(const std::vector<EpiClass>& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(kernel_abelianization(c.representative).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string options_key(const AnalyzeOptions& o) {
  std::ostringstream s;
  s << "max_cosets=" << o.max_cosets << ";budget=" << o.search_budget << ";xcheck=" << o.crosscheck_order_limit
    << ";fp=" << o.fingerprint_limit;
  return s.str();
}

}  // namespace

CensusRecord analyze(std::string_view family, std::string_view target, const AnalyzeOptions& options) {
  const auto start = Clock::now();
  const FamilySpec spec = parse_family_spec(family);
  const std::string tname = canonical_group_name(target);

  std::optional<ResultCache> cache;
  std::string key;
  if (!options.cache_dir.empty()) {
    cache.emplace(options.cache_dir);
    key = content_hash("census-v1|" + spec.to_string() + "|" + tname + "|" + options_key(options) + "|" +
                       std::string(kEnumerationStrategy));
    if (auto text = cache->load("records", key)) {
      // Unreadable or foreign entries are recomputed and overwritten.
      std::optional<CensusRecord> r;
      try {
        r = census_record_from_json(*text);
      } catch (const std::exception&) {
      }
      if (r && r->family == spec.to_string() && r->target == tname) {
        r->timings.clear();
        if (options.timings) r->timings["total"] = seconds_since(start);
        return *r;
      }
    }
  }

  auto G = catalog_finite_group(tname);
  const std::uint64_t order = G->size();
  const FamilyKind kind = spec.kind;
  FamilyLattice lattice(spec.labels);

  CensusRecord rec;
  rec.family = spec.to_string();
  rec.target = tname;
  rec.target_order = order;
  rec.geometry = to_string(classify_geometry(spec.labels));
  rec.ambient = kind_name(lattice.top());
  rec.transcription_unverified = transcription_unverified(kind);

  EpiSearchOptions search;
  search.node_budget = options.search_budget;

  auto presentation = std::make_shared<const Presentation>(build_presentation(spec));
  // The index-2 subgroup presentation of the reflection group with the same
  // twists, used as ground truth for the tetrahedral kinds.
  std::optional<FamilyLattice> small;
  if (is_tetrahedral(kind)) small.emplace(spec.labels, make_kind(false, has_tau(kind), has_mu(kind)));

  auto t0 = Clock::now();
  const bool use_subgroup = rec.transcription_unverified;
  auto source = use_subgroup ? small->subgroup_presentation(kind) : presentation;
  rec.class_source = use_subgroup ? "subgroup-presentation" : "presentation";
  EpiSearchResult found = enumerate_epimorphisms(source, G, search);
  rec.class_count = found.classes.size();
  rec.raw_solutions = found.raw_solutions;
  rec.search_nodes = found.nodes;
  if (options.timings) rec.timings["search"] = seconds_since(t0);

  t0 = Clock::now();
  auto roots = torsion_roots(*source, order, 20 * order + 1000);
  const bool roots_cover = kind == FamilyKind::T && !use_subgroup;
  std::vector<Word> source_words;
  if (use_subgroup) {
    const auto& sg = small->schreier(kind).words;
    source_words = translate(sg, *small->ambient(), *lattice.ambient());
  } else {
    source_words = lattice.embedding(kind);
  }

  rec.classes.resize(found.classes.size());
  std::vector<std::optional<AmbientAction>> actions(found.classes.size());
  detail::parallel_for(found.classes.size(), options.threads, [&](std::size_t i) {
    const auto& cls = found.classes[i];
    const Epimorphism& e = cls.representative;
    ClassRecord& c = rec.classes[i];
    c.id = i;
    c.fingerprint = cls.fingerprint_hex();
    c.members_found = cls.members_found;
    for (const auto& p : e.images) c.images.push_back(p.images());
    c.kernel_h1 = kernel_abelianization(e).to_string();

    Lift lift = lift_by_words(lattice, kind, e, source_words, options.search_budget);
    if (!lift.hom) {
      c.method_a = to_string(Verdict::Undetermined);
      c.method_b = to_string(Verdict::Undetermined);
      return;
    }
    AmbientAction a(lattice, kind, *lift.hom);
    ActionRecord ar = classify_action(a, e, roots, roots_cover, options.fingerprint_limit);
    c.ambient_analysis = true;
    c.admissible = ar.admissibility.admissible;
    c.method_a = to_string(ar.admissibility.method_a);
    c.method_b = to_string(ar.admissibility.method_b);
    c.non_free_local_groups = ar.admissibility.non_free_local_groups;
    c.killed_roots = ar.admissibility.killed_roots;
    c.orientable = ar.orientable;
    for (auto y : ar.contained_in) c.contained_in.push_back(kind_name(y));
    for (auto y : ar.normal_in) c.normal_in.push_back(kind_name(y));
    for (const auto& q : ar.quotients)
      c.quotients.push_back(
          {kind_name(q.kind), q.order, q.fingerprint ? q.fingerprint->to_string() : std::string(), q.consistent_with});
    if (ar.type) {
      c.action_type = to_string(*ar.type);
      c.type_constant = coxcensus::type_constant(*ar.type);
      c.type_group = kind_name(*ar.type_group);
      c.genus = ar.genus;
    }
    actions[i] = std::move(a);
  });
  if (options.timings) rec.timings["classes"] = seconds_since(t0);

  // Conjugacy of the kernels in the lattice groups above the source.
  t0 = Clock::now();
  const unsigned own = FamilyLattice::subgroup_bits(kind);
  for (FamilyKind y : lattice.kinds()) {
    unsigned bits = FamilyLattice::subgroup_bits(y);
    if (y == kind || (own & ~bits) != 0) continue;
    ConjugacyPartition part;
    part.kind = kind_name(y);
    std::vector<char> placed(rec.classes.size(), 0);
    for (std::size_t i = 0; i < rec.classes.size(); ++i) {
      if (placed[i] || !actions[i]) continue;
      std::vector<std::size_t> orbit{i};
      placed[i] = 1;
      for (std::size_t j = i + 1; j < rec.classes.size(); ++j) {
        if (placed[j] || !actions[j] || rec.classes[j].kernel_h1 != rec.classes[i].kernel_h1) continue;
        if (kernels_conjugate_in(*actions[i], *actions[j], y)) {
          orbit.push_back(j);
          placed[j] = 1;
        }
      }
      part.orbits.push_back(std::move(orbit));
    }
    rec.conjugacy.push_back(std::move(part));
  }
  if (options.timings) rec.timings["conjugacy"] = seconds_since(t0);

  if (is_tetrahedral(kind) && (rec.transcription_unverified || order <= options.crosscheck_order_limit)) {
    t0 = Clock::now();
    CrossCheck x;
    x.subgroup_of = kind_name(small->top());
    EpiSearchResult other;
    if (use_subgroup) {
      other = enumerate_epimorphisms(presentation, G, search);
      x.presentation_classes = other.classes.size();
      x.subgroup_classes = found.classes.size();
      x.presentation_h1 = sorted_h1(other.classes);
      for (const auto& c : rec.classes) x.subgroup_h1.push_back(c.kernel_h1);
      std::sort(x.subgroup_h1.begin(), x.subgroup_h1.end());
    } else {
      other = enumerate_epimorphisms(small->subgroup_presentation(kind), G, search);
      x.presentation_classes = found.classes.size();
      x.subgroup_classes = other.classes.size();
      for (const auto& c : rec.classes) x.presentation_h1.push_back(c.kernel_h1);
      std::sort(x.presentation_h1.begin(), x.presentation_h1.end());
      x.subgroup_h1 = sorted_h1(other.classes);
    }
    x.mismatch = x.presentation_classes != x.subgroup_classes || x.presentation_h1 != x.subgroup_h1;
    rec.crosscheck = std::move(x);
    if (options.timings) rec.timings["crosscheck"] = seconds_since(t0);
  }

  if (cache) {
    CensusRecord stored = rec;
    stored.timings.clear();
    cache->store("records", key, to_json(stored));
  }
  if (options.timings) rec.timings["total"] = seconds_since(start);
  return rec;
}

std::string to_text(const CensusRecord& r) {
  std::ostringstream o;
  o << r.family << " -> " << r.target << "  (order " << r.target_order << ", " << r.geometry << ", ambient "
    << r.ambient << ")\n";
  if (r.transcription_unverified)
    o << "note: unverified transcription; classes taken from the index-2 subgroup presentation\n";
  o << "classes: " << r.class_count << "   raw solutions: " << r.raw_solutions << "   search nodes: " << r.search_nodes
    << "\n";
  if (!r.classes.empty()) {
    o << std::left << std::setw(4) << "id" << std::setw(28) << "kernel H1" << std::setw(5) << "adm" << std::setw(8)
      << "orient" << std::setw(44) << "normal in" << std::setw(28) << "type" << std::setw(7) << "genus"
      << "quotient\n";
  }
  for (const auto& c : r.classes) {
    std::string normal;
    for (const auto& n : c.normal_in) normal += (normal.empty() ? "" : " ") + n;
    std::string quotient;
    if (c.type_group) {
      for (const auto& q : c.quotients) {
        if (q.kind != *c.type_group) continue;
        quotient = q.kind + "/K " + std::to_string(q.order);
        if (!q.consistent_with.empty()) quotient += " ~ " + q.consistent_with.front();
      }
    }
    o << std::left << std::setw(4) << c.id << std::setw(28) << c.kernel_h1 << std::setw(5)
      << (c.admissible ? "yes" : "no") << std::setw(8) << (c.orientable ? "yes" : "no") << std::setw(44) << normal
      << std::setw(28) << c.action_type.value_or("-") << std::setw(7)
      << (c.genus ? std::to_string(*c.genus) : std::string("-")) << quotient << "\n";
  }
  for (const auto& p : r.conjugacy) {
    bool merged = false;
    for (const auto& orb : p.orbits) merged |= orb.size() > 1;
    if (!merged) continue;
    o << "conjugate in " << p.kind << ":";
    for (const auto& orb : p.orbits) {
      if (orb.size() < 2) continue;
      o << " {";
      for (std::size_t i = 0; i < orb.size(); ++i) o << (i ? "," : "") << orb[i];
      o << "}";
    }
    o << "\n";
  }
  if (r.crosscheck) {
    const auto& x = *r.crosscheck;
    o << "cross-check against the index-2 subgroup of " << x.subgroup_of << ": " << x.presentation_classes << " vs "
      << x.subgroup_classes << " classes, " << (x.mismatch ? "MISMATCH" : "agree") << "\n";
  }
  for (const auto& [k, v] : r.timings) o << "time " << k << ": " << std::fixed << std::setprecision(3) << v << " s\n";
  return o.str();
}

}  // namespace coxcensus
