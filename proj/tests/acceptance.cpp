// Acceptance gate: one line per criterion. Integer quantities are compared
// exactly; the only real-valued tolerance is the Euclidean cut-off of the
// Gram determinant.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxcensus/abelianization.hpp"
#include "coxcensus/action_analysis.hpp"
#include "coxcensus/ambient_action.hpp"
#include "coxcensus/catalog.hpp"
#include "coxcensus/census.hpp"
#include "coxcensus/epimorphism.hpp"
#include "coxcensus/families.hpp"
#include "coxcensus/finite_group.hpp"
#include "coxcensus/fixtures.hpp"
#include "coxcensus/lattice.hpp"
#include "coxcensus/reidemeister_schreier.hpp"
#include "coxcensus/smith.hpp"
#include "oracles.hpp"

using namespace coxcensus;

namespace {

constexpr double kGeometryTolerance = 1e-9;

// Criteria expected to fail, with the reason. A known-red criterion that
// starts passing is reported as unexpected.
const std::map<int, std::string> kKnownRed = {
    {2,
     "the class listed with kernel H1 Z^12 has H1 Z2^12 here; its relator matrix has full column rank modulo an odd "
     "prime, so the kernel has no free part (see the rank line above)"},
};

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream o;
      o << what << ": expected " << want << ", got " << got;
      failures.push_back(o.str());
    }
  }
};

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> canon(std::vector<std::string> v) {
  for (auto& s : v) s = AbelianInvariants::parse(s).to_string();
  return sorted(v);
}

std::vector<std::string> h1s(const CensusRecord& r) {
  std::vector<std::string> v;
  for (const auto& c : r.classes) v.push_back(c.kernel_h1);
  return sorted(v);
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

const QuotientInfo* quotient(const ClassRecord& c, const std::string& kind) {
  for (const auto& q : c.quotients)
    if (q.kind == kind) return &q;
  return nullptr;
}

std::map<std::pair<std::string, std::string>, CensusRecord> g_records;

const CensusRecord& record(const std::string& family, const std::string& target) {
  auto key = std::make_pair(family, target);
  auto it = g_records.find(key);
  if (it == g_records.end()) it = g_records.emplace(key, analyze(family, target)).first;
  return it->second;
}

// The classes of a record as epimorphisms out of the presentation they were
// found on.
Epimorphism epimorphism(const CensusRecord& r, std::size_t i) {
  auto spec = parse_family_spec(r.family);
  Epimorphism e;
  if (r.class_source == "presentation") {
    e.source = std::make_shared<const Presentation>(build_presentation(spec));
  } else {
    FamilyLattice small(spec.labels, make_kind(false, has_tau(spec.kind), has_mu(spec.kind)));
    e.source = small.subgroup_presentation(spec.kind);
  }
  e.target = catalog_finite_group(r.target);
  for (const auto& img : r.classes.at(i).images) e.images.emplace_back(img);
  return e;
}

std::optional<AmbientAction> ambient(const FamilyLattice& L, const CensusRecord& r, std::size_t i) {
  auto spec = parse_family_spec(r.family);
  auto lift = lift_by_words(L, spec.kind, epimorphism(r, i), L.embedding(spec.kind), 500'000'000);
  if (!lift.hom) return std::nullopt;
  return AmbientAction(L, spec.kind, *lift.hom);
}

const ClassRecord* find_h1(const CensusRecord& r, const std::string& h1) {
  for (const auto& c : r.classes)
    if (c.kernel_h1 == h1) return &c;
  return nullptr;
}

void check_class(Outcome& o, const CensusRecord& r, const std::string& h1, const std::string& type,
                 std::uint64_t genus, const std::vector<std::string>& normal_in) {
  const ClassRecord* c = find_h1(r, h1);
  if (!c) {
    o.failures.push_back(r.family + ": no class with H1 " + h1);
    return;
  }
  std::string who = r.family + " class " + h1;
  o.expect(c->admissible, who + " admissible");
  o.equal(c->action_type.value_or("none"), type, who + " type");
  o.equal(c->genus.value_or(0), genus, who + " genus");
  for (const auto& n : normal_in) o.expect(contains(c->normal_in, n), who + " normal in " + n);
}

bool orbit_together(const CensusRecord& r, const std::string& kind, const std::string& h1) {
  std::vector<std::size_t> members;
  for (const auto& c : r.classes)
    if (c.kernel_h1 == h1) members.push_back(c.id);
  for (const auto& p : r.conjugacy)
    if (p.kind == kind)
      for (const auto& orb : p.orbits)
        if (std::all_of(members.begin(), members.end(),
                        [&](std::size_t m) { return std::find(orb.begin(), orb.end(), m) != orb.end(); }))
          return members.size() > 1;
  return false;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto& r = record("Ttau(5,5;2,2;3,3)", "A5");
  o.equal(r.class_count, 3u, "class count");
  o.equal(join(h1s(r)), join(canon({"Z^6", "Z2^4 x Z4 x Z5^3", "Z2^4 x Z4 x Z5^3"})), "kernel H1");
  for (const auto& c : r.classes) o.expect(c.admissible, "class " + c.kernel_h1 + " admissible");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& r = record("Ctau(5,5;2,2;3,3)", "A5xZ2");
  o.equal(r.class_count, 3u, "class count");
  o.equal(join(h1s(r)), join(canon({"Z^6", "Z^12", "Z^5 x Z2^2"})), "kernel H1");
  check_class(o, r, "Z^6", "48(g-1)", 6, {"Ctaumu"});
  if (const ClassRecord* c = find_h1(r, "Z^6")) {
    const QuotientInfo* q = quotient(*c, "Ctaumu");
    o.expect(q && q->order == 240, "Ctaumu/K has order 240");
    o.expect(q && contains(q->consistent_with, "S5xZ2"), "Ctaumu/K consistent with S5xZ2");
    // Same subgroup of the ambient group as the free kernel of criterion 1.
    const auto& r1 = record("Ttau(5,5;2,2;3,3)", "A5");
    const ClassRecord* k0 = find_h1(r1, "Z^6");
    FamilyLattice L(parse_family_spec(r.family).labels);
    auto a = ambient(L, r, c->id);
    auto b = k0 ? ambient(L, r1, k0->id) : std::nullopt;
    o.expect(a && b && kernels_equal(*a, *b), "Z^6 kernel equals the criterion-1 kernel");
  }
  // Independent look at the class without free part: rank of its
  // Reidemeister-Schreier relator matrix over several prime fields.
  for (const auto& c : r.classes) {
    if (c.kernel_h1 != "Z2^12") continue;
    auto e = epimorphism(r, c.id);
    oracle::Group g(e.target->group().generators());
    std::vector<std::size_t> image;
    for (const auto& x : e.images) image.push_back(g.index.at(x.images()));
    auto m = oracle::kernel_relation_matrix(*e.source, g, image);
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::ostringstream line;
    line << "relator matrix " << m.size() << "x" << cols << ", rank mod p:";
    std::size_t best_odd = 0;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 1000003ul, 2147483647ul}) {
      auto k = oracle::rank_mod(m, p);
      if (p != 2) best_odd = std::max(best_odd, k);
      line << " " << p << "->" << k;
    }
    line << "; free rank " << (best_odd == cols ? "0" : "unknown") << ", 2-rank " << cols - oracle::rank_mod(m, 2);
    o.notes.push_back(line.str());
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto [f, t] : {std::pair{"Ctaumu(5,5;2,2;3,3)", "A5"}, {"C(4,4;2,2;3,3)", "S4xZ2"}, {"Ctau(4,4;2,2;3,3)", "S4xZ2"},
                      {"C(5,5;2,2;2,3)", "A5xZ2"}, {"C(5,3;2,2;2,3)", "A5xZ2"}})
    o.equal(record(f, t).class_count, 0u, std::string(f) + " -> " + t + " class count");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& r = record("T(5,5;2,2;3,3)", "A5");
  o.equal(r.class_count, 3u, "class count");
  o.equal(join(h1s(r)), join(canon({"Z^11", "Z2 x Z3^4 x Z4^4 x Z5^3", "Z2 x Z3^4 x Z4^4 x Z5^3"})), "kernel H1");
  check_class(o, r, "Z^11", "48(g-1)", 11, {"C", "Ttau", "Tmu"});
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& r = record("T(4,4;2,2;3,3)", "PSL(2,7)");
  o.equal(r.class_count, 1u, "T class count");
  o.equal(join(h1s(r)), join({"Z^13"}), "T kernel H1");
  check_class(o, r, "Z^13", "48(g-1)", 29, {});
  const auto& c = record("C(4,4;2,2;3,3)", "PSL(2,7)xZ2");
  o.equal(c.class_count, 3u, "C class count");
  auto h = h1s(c);
  o.equal(std::count(h.begin(), h.end(), "Z^13"), 1, "C classes with H1 Z^13");
  check_class(o, c, "Z^13", "48(g-1)", 29, {});
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& r = record("T(5,5;2,2;2,3)", "A5");
  o.equal(r.class_count, 2u, "class count");
  for (const auto& c : r.classes) {
    std::string who = "class " + std::to_string(c.id);
    o.expect(c.admissible, who + " admissible");
    o.expect(contains(c.normal_in, "Tmu"), who + " normal in Tmu");
    const QuotientInfo* q = quotient(c, "Tmu");
    o.expect(q && q->order == 120, who + " Tmu/K of order 120");
    o.expect(q && contains(q->consistent_with, "S5"), who + " Tmu/K consistent with S5");
    o.equal(c.action_type.value_or("none"), std::string("interchanging 24(g-1)"), who + " type");
    o.equal(c.genus.value_or(0), 6u, who + " genus");
  }
  if (!r.classes.empty()) o.expect(orbit_together(r, "C", r.classes[0].kernel_h1), "kernels conjugate in C");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto& r = record("T(5,3;2,2;2,3)", "A5");
  o.equal(r.class_count, 2u, "class count");
  for (const auto& c : r.classes) {
    o.equal(c.kernel_h1, std::string("0"), "kernel H1");
    o.expect(c.admissible, "admissible");
    o.equal(c.action_type.value_or("none"), std::string("12(g-1)"), "type");
    o.equal(c.genus.value_or(0), 6u, "genus");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto& r = record("T(3,3;2,2;3,3)", "A4");
  o.equal(r.class_count, 5u, "class count");
  o.equal(join(h1s(r)), join(canon({"Z^3", "Z4^2", "Z4^2", "Z2^5", "Z2^5"})), "kernel H1");
  for (const auto& c : r.classes)
    if (c.kernel_h1 == "Z2^5") o.expect(!c.admissible, "Z2^5 class " + std::to_string(c.id) + " inadmissible");
  o.expect(orbit_together(r, "C", "Z4^2"), "Z4^2 kernels conjugate in C");
  check_class(o, r, "Z^3", "48(g-1)", 3, {});
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto& r = record("T(4,4;2,2;2,3)", "S4");
  o.equal(r.class_count, 3u, "class count");
  o.equal(join(h1s(r)), join(canon({"Z^3", "Z2^2 x Z4", "Z2^2 x Z4"})), "kernel H1");
  check_class(o, r, "Z^3", "48(g-1)", 3, {"Cmu"});
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::map<FamilyKind, int> per_kind;
  for (const auto& g : listed_groups()) {
    double det = gram_determinant(g.spec.labels);
    auto raw = std::abs(det) < kGeometryTolerance ? GeometryClass::Euclidean
               : det > 0                          ? GeometryClass::Spherical
                                                  : GeometryClass::Hyperbolic;
    o.expect(raw == g.geometry, g.spec.to_string() + " determinant sign");
    o.expect(classify_geometry(g.spec.labels) == g.geometry, g.spec.to_string() + " classifier");
    ++per_kind[g.spec.kind];
  }
  o.equal(per_kind[FamilyKind::C], 10, "C entries");
  o.equal(per_kind[FamilyKind::CTau], 10, "Ctau entries");
  o.equal(per_kind[FamilyKind::CMu], 4, "Cmu entries");
  o.equal(per_kind[FamilyKind::CTauMu], 4, "Ctaumu entries");
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto& r = record("T(5,5;2,2;2,3)", "PSL(2,19)");
  o.equal(r.class_count, 3u, "class count");
  for (const auto& c : r.classes) o.expect(c.admissible, "class " + std::to_string(c.id) + " admissible");
  auto h = h1s(r);
  o.equal(std::count(h.begin(), h.end(), "Z^56"), 1, "classes with H1 Z^56");
  check_class(o, r, "Z^56", "48(g-1)", 286, {"C", "Cmu"});
  return o;
}

Outcome criterion12() {
  Outcome o;
  const auto& r = record("Ctau(5,2;2,2;3,3)", "PGL(2,11)xZ2");
  o.equal(r.class_count, 1u, "class count");
  for (const auto& c : r.classes) {
    o.expect(c.admissible, "admissible");
    const QuotientInfo* q = quotient(c, "Ctau");
    o.expect(q && q->order == 2640, "quotient of order 2640");
    o.expect(q && contains(q->consistent_with, "PGL(2,11)xZ2"), "quotient consistent with PGL(2,11)xZ2");
    o.equal(c.action_type.value_or("none"), std::string("non-interchanging 24(g-1)"), "type");
    o.equal(c.genus.value_or(0), 111u, "genus");
  }
  return o;
}

Outcome criterion13() {
  Outcome o;
  std::size_t tables = 0, trees = 0;
  std::set<TetrahedronLabels> labels;
  for (const auto& [key, r] : g_records) {
    if (key.second == "PGL(2,11)xZ2") continue;  // criterion 12 is outside the range
    labels.insert(parse_family_spec(r.family).labels);
    const bool quick = r.target_order <= 336;
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      auto e = epimorphism(r, i);
      auto t = kernel_table(e);
      auto d = t.defect();
      o.expect(!d, r.family + " -> " + r.target + " class " + std::to_string(i) + " table: " + d.value_or(""));
      ++tables;
      if (quick) {
        auto fwd = subgroup_abelian_invariants(t);
        auto rev = subgroup_abelian_invariants(t.with_tree_order(TreeOrder::Reverse));
        o.expect(fwd == rev, r.family + " class " + std::to_string(i) + " H1 depends on the tree");
        o.equal(fwd.to_string(), r.classes[i].kernel_h1, r.family + " class " + std::to_string(i) + " H1");
        ++trees;
      }
    }
  }
  for (const auto& l : labels) {
    FamilyLattice L(l);
    for (auto k : L.kinds()) {
      o.expect(!L.table(k).defect(), "lattice table " + kind_name(k) + "(" + l.to_string() + ")");
      ++tables;
    }
  }
  o.notes.push_back(std::to_string(tables) + " tables validated, " + std::to_string(trees) +
                    " kernels compared across tree orders");
  return o;
}

Outcome criterion14() {
  Outcome o;
  std::mt19937 rng(14);
  auto random_sparse = [&](std::size_t rows, std::size_t cols, double density, long bound) {
    IntegerMatrix m(rows, cols);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<long> v(-bound, bound);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (u(rng) < density) m.set(i, j, v(rng));
    return m;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    auto m = random_sparse(r, c, std::uniform_real_distribution<double>(0.02, 0.3)(rng), 9);
    auto d = smith_invariant_factors(m);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) chain = chain && d[i] > 0 && d[i + 1] % d[i] == 0;
    o.expect(chain, "divisibility chain, sparse trial " + std::to_string(trial));
    std::vector<std::size_t> ro(r), co(c);
    for (std::size_t i = 0; i < r; ++i) ro[i] = i;
    for (std::size_t j = 0; j < c; ++j) co[j] = j;
    std::shuffle(ro.begin(), ro.end(), rng);
    std::shuffle(co.begin(), co.end(), rng);
    o.expect(smith_invariant_factors(m.permuted(ro, co)) == d, "permutation invariance, trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto m = random_sparse(r, c, 0.6, trial % 2 ? 25 : 5);
    auto ours = AbelianInvariants::from_diagonal(0, smith_invariant_factors(m));
    auto ref = AbelianInvariants::from_diagonal(0, oracle::smith_diagonal(m.to_dense()));
    o.expect(ours == ref, "oracle agreement, dense trial " + std::to_string(trial));
    o.expect(cokernel_invariants(m).rank == c - smith_invariant_factors(m).size(), "cokernel rank");
  }
  return o;
}

Outcome criterion15() {
  Outcome o;
  for (auto [labels, target] : {std::pair{"5,5;2,2;3,3", "A5"}, {"3,3;2,2;3,3", "A4"}, {"5,3;2,2;2,3", "A5"}}) {
    auto spec = parse_family_spec(std::string("T(") + labels + ")");
    auto G = catalog_finite_group(target);
    auto presented = std::make_shared<const Presentation>(build_presentation(spec));
    FamilyLattice L(spec.labels, FamilyKind::C);
    auto rs = L.subgroup_presentation(FamilyKind::T);
    auto a = enumerate_epimorphisms(presented, G), b = enumerate_epimorphisms(rs, G);
    std::vector<std::string> ha, hb;
    for (const auto& c : a.classes) ha.push_back(kernel_abelianization(c.representative).to_string());
    for (const auto& c : b.classes) hb.push_back(kernel_abelianization(c.representative).to_string());
    std::string who = std::string("(") + labels + ") -> " + target;
    o.equal(b.classes.size(), a.classes.size(), who + " class count");
    o.equal(join(sorted(hb)), join(sorted(ha)), who + " kernel H1");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_extended = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--skip-extended") skip_extended = true;

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1},   {2, criterion2},   {3, criterion3},   {4, criterion4},   {5, criterion5},
      {6, criterion6},   {7, criterion7},   {8, criterion8},   {9, criterion9},   {10, criterion10},
      {11, criterion11}, {12, criterion12}, {13, criterion13}, {14, criterion14}, {15, criterion15},
  };
  const std::map<int, std::string> titles = {
      {1, "Ttau(5,5;2,2;3,3) -> A5"},
      {2, "Ctau(5,5;2,2;3,3) -> A5xZ2"},
      {3, "five groups without the quotient"},
      {4, "T(5,5;2,2;3,3) -> A5"},
      {5, "T(4,4;2,2;3,3) -> PSL(2,7) and C(4,4;2,2;3,3) -> PSL(2,7)xZ2"},
      {6, "T(5,5;2,2;2,3) -> A5"},
      {7, "T(5,3;2,2;2,3) -> A5"},
      {8, "T(3,3;2,2;3,3) -> A4"},
      {9, "T(4,4;2,2;2,3) -> S4"},
      {10, "geometry of the listed tetrahedra (tolerance 1e-9)"},
      {11, "T(5,5;2,2;2,3) -> PSL(2,19)"},
      {12, "Ctau(5,2;2,2;3,3) -> PGL(2,11)xZ2"},
      {13, "coset table validation and tree-order invariance"},
      {14, "Smith form properties and dense oracle"},
      {15, "presented T groups vs index-2 subgroups of C"},
  };

  int unexpected = 0;
  for (const auto& [id, run] : criteria) {
    if (skip_extended && (id == 11 || id == 12)) {
      std::cout << "criterion " << id << ": SKIP " << titles.at(id) << "\n";
      continue;
    }
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = o.failures.empty();
    auto red = kKnownRed.find(id);
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " " << titles.at(id);
    if (red != kKnownRed.end()) std::cout << (pass ? " (expected to fail)" : " (known)");
    std::cout << "\n";
    for (const auto& n : o.notes) std::cout << "    note: " << n << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (red != kKnownRed.end() && !pass) std::cout << "    analysis: " << red->second << "\n";
    if (pass == (red != kKnownRed.end())) ++unexpected;
    std::cout.flush();
  }
  std::cout << (unexpected ? "acceptance: unexpected results in " + std::to_string(unexpected) + " criteria\n"
                           : "acceptance: all criteria as expected\n");
  return unexpected ? 1 : 0;
}
