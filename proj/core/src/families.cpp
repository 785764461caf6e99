#include "coxcensus/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "coxcensus/errors.hpp"

namespace coxcensus {

int TetrahedronLabels::edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return c;
  if (i == 2 && j == 3) return a;
  if (i == 3 && j == 4) return d;
  if (i == 1 && j == 4) return b;
  if (i == 1 && j == 3) return n;
  if (i == 2 && j == 4) return m;
  throw std::invalid_argument("TetrahedronLabels::edge: faces must be distinct and in 1..4");
}

bool TetrahedronLabels::valid() const {
  for (int x : {n, m, a, b, c, d})
    if (x < 2) return false;
  for (const auto& v : vertex_groups(*this)) {
    auto [p, q, r] = v.triangle;
    if (q * r + p * r + p * q <= p * q * r) return false;
  }
  return true;
}

std::string TetrahedronLabels::to_string() const {
  return std::to_string(n) + "," + std::to_string(m) + ";" + std::to_string(a) + "," + std::to_string(b) + ";" +
         std::to_string(c) + "," + std::to_string(d);
}

FamilyKind make_kind(bool tetrahedral, bool tau, bool mu) {
  if (tetrahedral) return tau ? (mu ? FamilyKind::TTauMu : FamilyKind::TTau) : (mu ? FamilyKind::TMu : FamilyKind::T);
  return tau ? (mu ? FamilyKind::CTauMu : FamilyKind::CTau) : (mu ? FamilyKind::CMu : FamilyKind::C);
}

std::string kind_name(FamilyKind k) {
  std::string s = is_tetrahedral(k) ? "T" : "C";
  if (has_tau(k)) s += "tau";
  if (has_mu(k)) s += "mu";
  return s;
}

std::string kind_display(FamilyKind k) {
  std::string s = is_tetrahedral(k) ? "T" : "C";
  if (has_tau(k) || has_mu(k)) s += "_";
  if (has_tau(k)) s += "\xCF\x84";
  if (has_mu(k)) s += "\xCE\xBC";
  return s;
}

const std::vector<FamilyKind>& all_kinds() {
  static const std::vector<FamilyKind> k{FamilyKind::C, FamilyKind::CTau, FamilyKind::CMu, FamilyKind::CTauMu,
                                         FamilyKind::T, FamilyKind::TTau, FamilyKind::TMu, FamilyKind::TTauMu};
  return k;
}

std::string FamilySpec::to_string() const { return kind_name(kind) + "(" + labels.to_string() + ")"; }

bool tau_applicable(const TetrahedronLabels& l) { return l.a == 2 && l.b == 2 && l.c == 3 && l.d == 3; }
bool mu_applicable(const TetrahedronLabels& l) { return l.n == l.m && l.a == 2 && l.b == 2 && l.d == 3; }

bool kind_applicable(const TetrahedronLabels& l, FamilyKind k) {
  if (has_tau(k) && !tau_applicable(l)) return false;
  if (has_mu(k) && !mu_applicable(l)) return false;
  return true;
}

namespace {

void check_applicable(const FamilySpec& s) {
  if (has_tau(s.kind) && !tau_applicable(s.labels))
    throw std::invalid_argument(s.to_string() + ": the tau twist needs labels of shape (n,m;2,2;3,3)");
  if (has_mu(s.kind) && !mu_applicable(s.labels))
    throw std::invalid_argument(s.to_string() + ": the mu twist needs labels of shape (n,n;2,2;c,3)");
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\xCF\x84") == 0) {
      s += "tau";
      ++i;
    } else if (text.compare(i, 2, "\xCE\xBC") == 0) {
      s += "mu";
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '_') {
      s += text[i];
    }
  }
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw ParseError(1, 1, "expected KIND(n,m;a,b;c,d)");
  std::string head = s.substr(0, open);
  FamilySpec spec;
  bool found = false;
  for (auto k : all_kinds()) {
    if (kind_name(k) == head) {
      spec.kind = k;
      found = true;
    }
  }
  if (!found) throw ParseError(1, 1, "unknown group kind '" + head + "'");
  std::string body = s.substr(open + 1, s.size() - open - 2);
  int v[6];
  std::size_t pos = 0;
  for (int i = 0; i < 6; ++i) {
    std::size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == start || pos - start > 6) throw ParseError(1, open + 2 + start, "expected an edge label");
    v[i] = std::stoi(body.substr(start, pos - start));
    if (i < 5) {
      char want = i % 2 == 0 ? ',' : ';';
      if (pos >= body.size() || body[pos] != want) throw ParseError(1, open + 2 + pos, std::string("expected '") + want + "'");
      ++pos;
    }
  }
  if (pos != body.size()) throw ParseError(1, open + 2 + pos, "trailing characters in label list");
  spec.labels = {v[0], v[1], v[2], v[3], v[4], v[5]};
  for (int x : v)
    if (x < 2) throw std::invalid_argument(spec.to_string() + ": edge labels must be at least 2");
  check_applicable(spec);
  return spec;
}

bool transcription_unverified(FamilyKind k) { return k == FamilyKind::TMu || k == FamilyKind::TTauMu; }

Presentation build_presentation(const FamilySpec& spec) {
  check_applicable(spec);
  const auto& L = spec.labels;
  const int n = L.n, m = L.m, c = L.c;
  const Word f1{1}, f2{2}, f3{3}, f4{4};

  if (!is_tetrahedral(spec.kind)) {
    std::vector<std::string> names{"f1", "f2", "f3", "f4"};
    std::vector<Word> rels{f1.power(2),
                           f2.power(2),
                           f3.power(2),
                           f4.power(2),
                           (f1 * f2).power(L.c),
                           (f2 * f3).power(L.a),
                           (f3 * f4).power(L.d),
                           (f4 * f1).power(L.b),
                           (f1 * f3).power(L.n),
                           (f2 * f4).power(L.m)};
    int t = 0, u = 0;
    if (has_tau(spec.kind)) {
      names.push_back("t");
      t = static_cast<int>(names.size());
      Word T{t};
      rels.push_back(T.power(2));
      rels.push_back(T * f1 * T.inverse() * f3.inverse());
      rels.push_back(T * f2 * T.inverse() * f4.inverse());
    }
    if (has_mu(spec.kind)) {
      names.push_back("m");
      u = static_cast<int>(names.size());
      Word U{u};
      rels.push_back(U.power(2));
      rels.push_back(U * f1 * U.inverse() * f2.inverse());
      rels.push_back(U * f3 * U.inverse() * f4.inverse());
    }
    if (t && u) rels.push_back((Word{t} * Word{u}).power(2));
    return Presentation(std::move(names), std::move(rels));
  }

  switch (spec.kind) {
    case FamilyKind::T:
      return Presentation({"f1", "f2", "f3", "f4"},
                          {f1.power(c), f2.power(2), f3.power(2), f4.power(3), f1 * f2 * f3 * f4, (f1 * f2).power(n),
                           (f2 * f4).power(m)});
    case FamilyKind::TTau:
      return Presentation({"f1", "f2", "f3", "f4"},
                          {f1.power(2), f2.power(2), f3.power(2), f4.power(3), f1 * f2 * f3 * f4, (f1 * f2).power(n),
                           (f2 * f3 * f2 * f4).power(m)});
    case FamilyKind::TMu: {
      const Word f5{5};
      return Presentation({"f1", "f2", "f3", "f4", "f5"},
                          {f1.power(c), f2.power(2), f3.power(2), f4.power(3), f1 * f2 * f3 * f4, (f1 * f2).power(n),
                           f5.power(2), (f1 * f5).power(n), (f4 * f5).power(n), f3 * f4 * f5 * f2 * f4 * f5});
    }
    case FamilyKind::TTauMu: {
      const Word f5{5};
      return Presentation({"f1", "f2", "f3", "f4", "f5"},
                          {f1.power(2), f2.power(2), f3.power(2), f4.power(3), f1 * f2 * f3 * f4, (f1 * f2).power(n),
                           f5.power(2), (f1 * f5).power(2), (f4 * f5).power(2), (f2 * f4 * f5).power(2)});
    }
    default:
      break;
  }
  throw std::logic_error("build_presentation: unreachable");
}

std::vector<VertexGroup> vertex_groups(const TetrahedronLabels& l) {
  std::vector<VertexGroup> out;
  for (int omit = 4; omit >= 1; --omit) {
    VertexGroup v;
    v.omitted_face = omit;
    int k = 0;
    for (int f = 1; f <= 4; ++f)
      if (f != omit) v.faces[static_cast<std::size_t>(k++)] = f;
    v.triangle = {l.edge(v.faces[0], v.faces[1]), l.edge(v.faces[1], v.faces[2]), l.edge(v.faces[0], v.faces[2])};
    std::sort(v.triangle.begin(), v.triangle.end());
    std::int64_t p = v.triangle[0], q = v.triangle[1], r = v.triangle[2];
    std::int64_t den = q * r + p * r + p * q - p * q * r;
    v.order = den > 0 ? static_cast<std::uint64_t>(4 * p * q * r / den) : 0;
    out.push_back(v);
  }
  return out;
}

std::vector<Word> twist_conjugation(const FamilySpec& spec, Twist twist) {
  bool need_tau = twist != Twist::Mu, need_mu = twist != Twist::Tau;
  if (need_tau && !tau_applicable(spec.labels))
    throw std::invalid_argument(spec.to_string() + ": tau is not a symmetry of these labels");
  if (need_mu && !mu_applicable(spec.labels))
    throw std::invalid_argument(spec.to_string() + ": mu is not a symmetry of these labels");
  switch (twist) {
    case Twist::Tau:
      return {Word{3}, Word{4}, Word{1}, Word{2}};
    case Twist::Mu:
      return {Word{2}, Word{1}, Word{4}, Word{3}};
    case Twist::TauMu:
      return {Word{4}, Word{3}, Word{2}, Word{1}};
  }
  return {};
}

int type_constant(ActionType t) {
  switch (t) {
    case ActionType::Type12:
      return 12;
    case ActionType::Type24NonInterchanging:
    case ActionType::Type24Interchanging:
      return 24;
    case ActionType::Type48:
      return 48;
  }
  return 0;
}

std::string to_string(ActionType t) {
  switch (t) {
    case ActionType::Type12:
      return "12(g-1)";
    case ActionType::Type24NonInterchanging:
      return "non-interchanging 24(g-1)";
    case ActionType::Type24Interchanging:
      return "interchanging 24(g-1)";
    case ActionType::Type48:
      return "48(g-1)";
  }
  return "?";
}

std::optional<std::uint64_t> genus_from_order(std::uint64_t group_order, ActionType t) {
  auto k = static_cast<std::uint64_t>(type_constant(t));
  if (group_order == 0 || group_order % k != 0) return std::nullopt;
  return group_order / k + 1;
}

namespace {

bool family_a(const TetrahedronLabels& l) { return l.a == 2 && l.b == 2 && l.c == 2 && l.d == 3; }
bool family_b(const TetrahedronLabels& l) { return tau_applicable(l); }

}  // namespace

std::optional<FamilyKind> kind_for_type(const TetrahedronLabels& l, ActionType t) {
  bool tau;
  if (family_a(l))
    tau = false;
  else if (family_b(l))
    tau = true;
  else
    return std::nullopt;
  FamilyKind k;
  switch (t) {
    case ActionType::Type12:
      k = make_kind(true, tau, false);
      break;
    case ActionType::Type24NonInterchanging:
      k = make_kind(false, tau, false);
      break;
    case ActionType::Type24Interchanging:
      k = make_kind(true, tau, true);
      break;
    default:
      k = make_kind(false, tau, true);
      break;
  }
  if (!kind_applicable(l, k)) return std::nullopt;
  return k;
}

std::optional<ActionType> type_for_kind(const TetrahedronLabels& l, FamilyKind k) {
  for (auto t : {ActionType::Type12, ActionType::Type24NonInterchanging, ActionType::Type24Interchanging,
                 ActionType::Type48}) {
    auto kk = kind_for_type(l, t);
    if (kk && *kk == k) return t;
  }
  return std::nullopt;
}

}  // namespace coxcensus
