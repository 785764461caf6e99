#include <cmath>
#include <numbers>

#include "coxcensus/families.hpp"

namespace coxcensus {

std::string to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Spherical:
      return "spherical";
    case GeometryClass::Euclidean:
      return "euclidean";
    case GeometryClass::Hyperbolic:
      return "hyperbolic";
    case GeometryClass::Invalid:
      return "invalid";
  }
  return "?";
}

double gram_determinant(const TetrahedronLabels& l) {
  double g[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g[i][j] = i == j ? 1.0 : -std::cos(std::numbers::pi / l.edge(i + 1, j + 1));
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(g[r][col]) > std::fabs(g[piv][col])) piv = r;
    if (std::fabs(g[piv][col]) < 1e-300) return 0.0;
    if (piv != col) {
      for (int k = 0; k < 4; ++k) std::swap(g[piv][k], g[col][k]);
      det = -det;
    }
    det *= g[col][col];
    for (int r = col + 1; r < 4; ++r) {
      double f = g[r][col] / g[col][col];
      for (int k = col; k < 4; ++k) g[r][k] -= f * g[col][k];
    }
  }
  return det;
}

const std::vector<ListedGroup>& listed_groups() {
  static const std::vector<ListedGroup> lists = [] {
    std::vector<ListedGroup> v;
    auto add = [&](FamilyKind k, int n, int m, int c, GeometryClass g, const char* list) {
      v.push_back({{{n, m, 2, 2, c, 3}, k}, g, list});
    };
    using G = GeometryClass;
    for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}})
      add(FamilyKind::C, n, m, 2, G::Spherical, "C(n,m;2,2;2,3)");
    add(FamilyKind::C, 4, 4, 2, G::Euclidean, "C(n,m;2,2;2,3)");
    add(FamilyKind::C, 4, 5, 2, G::Hyperbolic, "C(n,m;2,2;2,3)");
    add(FamilyKind::C, 5, 5, 2, G::Hyperbolic, "C(n,m;2,2;2,3)");

    for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {2, 4}}) add(FamilyKind::CTau, n, m, 3, G::Spherical, "C(n,m;2,2;3,3)");
    add(FamilyKind::CTau, 3, 3, 3, G::Euclidean, "C(n,m;2,2;3,3)");
    for (auto [n, m] : {std::pair{2, 5}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 5}})
      add(FamilyKind::CTau, n, m, 3, G::Hyperbolic, "C(n,m;2,2;3,3)");

    add(FamilyKind::CMu, 2, 2, 2, G::Spherical, "C(n,n;2,2;2,3) with mu");
    add(FamilyKind::CMu, 3, 3, 2, G::Spherical, "C(n,n;2,2;2,3) with mu");
    add(FamilyKind::CMu, 4, 4, 2, G::Euclidean, "C(n,n;2,2;2,3) with mu");
    add(FamilyKind::CMu, 5, 5, 2, G::Hyperbolic, "C(n,n;2,2;2,3) with mu");

    add(FamilyKind::CTauMu, 2, 2, 3, G::Spherical, "C(n,n;2,2;3,3) with tau and mu");
    add(FamilyKind::CTauMu, 3, 3, 3, G::Euclidean, "C(n,n;2,2;3,3) with tau and mu");
    add(FamilyKind::CTauMu, 4, 4, 3, G::Hyperbolic, "C(n,n;2,2;3,3) with tau and mu");
    add(FamilyKind::CTauMu, 5, 5, 3, G::Hyperbolic, "C(n,n;2,2;3,3) with tau and mu");
    return v;
  }();
  return lists;
}

GeometryClass classify_geometry(const TetrahedronLabels& l) {
  if (!l.valid()) return GeometryClass::Invalid;
  double det = gram_determinant(l);
  GeometryClass g = std::fabs(det) < 1e-9 ? GeometryClass::Euclidean
                    : det > 0             ? GeometryClass::Spherical
                                          : GeometryClass::Hyperbolic;
  // The tables are exact; the determinant is floating point.
  for (const auto& e : listed_groups())
    if (e.spec.labels == l) return e.geometry;
  return g;
}

}  // namespace coxcensus
