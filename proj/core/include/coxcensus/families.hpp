#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxcensus/presentation.hpp"

namespace coxcensus {

// Opposite-edge label pairs (n,m), (a,b), (c,d). With f1..f4 the face
// reflections: f1f2 ~ c, f2f3 ~ a, f3f4 ~ d, f4f1 ~ b, f1f3 ~ n, f2f4 ~ m.
struct TetrahedronLabels {
  int n = 2, m = 2, a = 2, b = 2, c = 2, d = 2;

  // Label of the edge between faces i and j (1-based, i != j).
  int edge(int i, int j) const;
  bool valid() const;
  std::string to_string() const;  // "5,5;2,2;3,3"
  friend bool operator==(const TetrahedronLabels&, const TetrahedronLabels&) = default;
  friend auto operator<=>(const TetrahedronLabels&, const TetrahedronLabels&) = default;
};

enum class FamilyKind { C, CTau, CMu, CTauMu, T, TTau, TMu, TTauMu };

constexpr bool has_tau(FamilyKind k) {
  return k == FamilyKind::CTau || k == FamilyKind::CTauMu || k == FamilyKind::TTau || k == FamilyKind::TTauMu;
}
constexpr bool has_mu(FamilyKind k) {
  return k == FamilyKind::CMu || k == FamilyKind::CTauMu || k == FamilyKind::TMu || k == FamilyKind::TTauMu;
}
constexpr bool is_tetrahedral(FamilyKind k) {
  return k == FamilyKind::T || k == FamilyKind::TTau || k == FamilyKind::TMu || k == FamilyKind::TTauMu;
}
FamilyKind make_kind(bool tetrahedral, bool tau, bool mu);

std::string kind_name(FamilyKind k);  // "C", "Ctau", ..., "Ttaumu"
std::string kind_display(FamilyKind k);  // "C_τμ" etc.
const std::vector<FamilyKind>& all_kinds();

struct FamilySpec {
  TetrahedronLabels labels;
  FamilyKind kind = FamilyKind::C;

  std::string to_string() const;  // "Ctau(5,5;2,2;3,3)"
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

bool tau_applicable(const TetrahedronLabels& l);  // shape (n,m;2,2;3,3)
bool mu_applicable(const TetrahedronLabels& l);   // shape (n,n;2,2;c,3)
bool kind_applicable(const TetrahedronLabels& l, FamilyKind k);

// "Ctau(5,5;2,2;3,3)", also "C_tau(...)", "C_τμ(...)", "Ttaumu(...)".
// Throws ParseError on syntax errors and std::invalid_argument when the
// kind does not fit the labels.
FamilySpec parse_family_spec(std::string_view text);

// Generators f1..f4 (plus t and/or m for the twisted reflection groups, f5
// for the twisted tetrahedral groups with mu). Throws std::invalid_argument
// when the kind does not fit the labels.
Presentation build_presentation(const FamilySpec& spec);

// The presentations of the mu-twisted tetrahedral groups are taken verbatim
// from the literature and carry a suspected misprint; they are cross-checked
// against the index-2 subgroup computed directly.
bool transcription_unverified(FamilyKind k);

enum class GeometryClass { Spherical, Euclidean, Hyperbolic, Invalid };
std::string to_string(GeometryClass g);

double gram_determinant(const TetrahedronLabels& l);
GeometryClass classify_geometry(const TetrahedronLabels& l);

struct ListedGroup {
  FamilySpec spec;
  GeometryClass geometry;
  std::string list;  // shape of the list the entry belongs to
};
// The published tables of spherical, Euclidean and hyperbolic groups of the
// four shapes: 10 + 10 + 4 + 4 entries.
const std::vector<ListedGroup>& listed_groups();

struct VertexGroup {
  int omitted_face;             // the vertex opposite this face
  std::array<int, 3> faces;     // the three faces meeting there
  std::array<int, 3> triangle;  // labels (p, q, r) of the three edges, sorted
  std::uint64_t order;          // extended triangle group 4pqr/(qr+pr+pq-pqr)
  std::uint64_t rotation_order() const { return order / 2; }
};
std::vector<VertexGroup> vertex_groups(const TetrahedronLabels& l);

enum class Twist { Tau, Mu, TauMu };
// Images of f1..f4 under conjugation by the twist, as words in f1..f4.
std::vector<Word> twist_conjugation(const FamilySpec& spec, Twist twist);

enum class ActionType { Type12, Type24NonInterchanging, Type24Interchanging, Type48 };
int type_constant(ActionType t);
std::string to_string(ActionType t);
// |G| / k + 1, or nullopt when k does not divide |G| or the quotient is 0.
std::optional<std::uint64_t> genus_from_order(std::uint64_t group_order, ActionType t);

// The kind whose quotients realise the given action type for this label
// shape, if the shape is one of the two families (n,m;2,2;2,3) and
// (n,m;2,2;3,3).
std::optional<FamilyKind> kind_for_type(const TetrahedronLabels& l, ActionType t);
std::optional<ActionType> type_for_kind(const TetrahedronLabels& l, FamilyKind k);

}  // namespace coxcensus
