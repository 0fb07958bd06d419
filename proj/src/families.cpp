#include "pla/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace pla {

namespace {

RationalLine L(std::int64_t a, std::int64_t b, std::int64_t c) {
  return RationalLine(BigRational(a), BigRational(b), BigRational(c));
}

TVector tv(int n, std::vector<std::int64_t> counts) { return TVector(n, std::move(counts)); }

TVector r1_vector(int m) {
  if (m == 3) return tv(6, {3, 4});
  std::map<int, std::int64_t> w{{2, m}, {3, std::int64_t{m} * (m - 1) / 2}};
  w[m] += 1;
  return TVector::from_weights(2 * m, w);
}

TVector r2_vector(int k) {
  std::map<int, std::int64_t> w;
  w[2] += 3 * std::int64_t{k};
  w[3] += 2 * std::int64_t{k} * k - 2 * std::int64_t{k};
  w[4] += k;
  w[2 * k] += 1;
  return TVector::from_weights(4 * k + 1, w);
}

TVector near_pencil_vector(int n) {
  std::map<int, std::int64_t> w{{2, n - 1}};
  w[n - 1] += 1;
  return TVector::from_weights(n, w);
}

std::vector<RationalLine> a13_2_lines() {
  return {L(1, 0, 0),  L(1, 0, -1), L(1, 0, -2), L(0, 1, 0),  L(0, 1, -1), L(0, 1, -2), L(1, -1, 0),
          L(1, -1, -1), L(1, -1, 1), L(1, 1, -1), L(1, 1, -2), L(1, 1, -3), L(0, 0, 1)};
}

// Complete quadrilateral: the four sides of the unit square and its diagonals.
std::vector<RationalLine> a6_1_lines() {
  return {L(0, 1, 0), L(0, 1, -1), L(1, 0, 0), L(1, 0, -1), L(1, -1, 0), L(1, 1, -1)};
}

std::vector<RationalLine> a9_1_lines() {
  return {L(1, 0, -1), L(1, 0, 1), L(0, 1, -1), L(0, 1, 1), L(1, 0, 0),
          L(0, 1, 0),  L(1, -1, 0), L(1, 1, 0), L(0, 0, 1)};
}

std::vector<RationalLine> near_pencil_lines(int n) {
  std::vector<RationalLine> out;
  for (int k = 0; k + 3 <= n; ++k) out.push_back(L(k, -1, 0));
  out.push_back(L(1, 0, 0));
  out.push_back(L(1, 1, -1));
  return out;
}

ChamberGraph build_graph(const Arrangement& arr, const Chamber& c) {
  ChamberGraph g;
  g.nodes = c.lines;
  for (int v : c.vertices) {
    const auto& ids = arr.vertices[v];
    if (ids.size() < 3) continue;
    std::vector<int> common;
    std::set_intersection(ids.begin(), ids.end(), c.lines.begin(), c.lines.end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        g.edges.push_back({common[i], common[j], static_cast<int>(ids.size())});
      }
    }
  }
  return g;
}

}  // namespace

std::string FamilyTag::to_string() const {
  switch (family) {
    case Family::NearPencil:
      return "NearPencil(" + std::to_string(parameter) + ")";
    case Family::R1:
      return "R1(" + std::to_string(parameter) + ")";
    case Family::R2:
      return "R2(" + std::to_string(parameter) + ")";
    case Family::Coxeter:
      switch (coxeter) {
        case CoxeterType::A61:
          return "Coxeter(A61)";
        case CoxeterType::A91:
          return "Coxeter(A91)";
        case CoxeterType::A151:
          return "Coxeter(A151)";
      }
      break;
    case Family::A132:
      return "A132";
    case Family::KellyMoser:
      return "KellyMoser";
    case Family::Unrecognized:
      return "Unrecognized";
  }
  return "Unrecognized";
}

std::optional<FamilyTag> parse_family(const std::string& text, int parameter) {
  std::string s;
  for (char ch : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  // to_string forms: "r1(4)", "nearpencil(5)", "coxeter(a91)"
  if (auto open = s.find('('); open != std::string::npos && s.back() == ')') {
    std::string head = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (head == "coxeter") return parse_family(inner, 0);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos || inner.size() > 6) {
      return std::nullopt;
    }
    return parse_family(head, std::stoi(inner));
  }
  if (s == "near-pencil" || s == "nearpencil") return FamilyTag{Family::NearPencil, parameter, {}};
  if (s == "r1") return FamilyTag{Family::R1, parameter, {}};
  if (s == "r2") return FamilyTag{Family::R2, parameter, {}};
  if (s == "a61" || s == "coxeter-a61") return FamilyTag{Family::Coxeter, 0, CoxeterType::A61};
  if (s == "a91" || s == "coxeter-a91") return FamilyTag{Family::Coxeter, 0, CoxeterType::A91};
  if (s == "a151" || s == "coxeter-a151") return FamilyTag{Family::Coxeter, 0, CoxeterType::A151};
  if (s == "a132") return FamilyTag{Family::A132, 0, {}};
  if (s == "kelly-moser" || s == "kellymoser" || s == "a71") return FamilyTag{Family::KellyMoser, 0, {}};
  return std::nullopt;
}

std::vector<FamilyTag> detect_family(int n, const TVector& t) {
  if (n != t.n()) throw RejectedInput("t-vector belongs to n = " + std::to_string(t.n()));
  std::vector<FamilyTag> tags;
  if (is_near_pencil(t)) tags.push_back({Family::NearPencil, n, {}});
  if (n % 2 == 0 && n >= 6 && t == r1_vector(n / 2)) tags.push_back({Family::R1, n / 2, {}});
  if (n % 4 == 1 && n >= 9 && t == r2_vector((n - 1) / 4)) tags.push_back({Family::R2, (n - 1) / 4, {}});
  if (t == tv(6, {3, 4})) tags.push_back({Family::Coxeter, 0, CoxeterType::A61});
  if (t == tv(9, {6, 4, 3})) tags.push_back({Family::Coxeter, 0, CoxeterType::A91});
  if (t == tv(15, {15, 10, 0, 6})) tags.push_back({Family::Coxeter, 0, CoxeterType::A151});
  if (t == tv(13, {12, 4, 9})) tags.push_back({Family::A132, 0, {}});
  if (t == tv(7, {3, 6})) tags.push_back({Family::KellyMoser, 0, {}});
  if (tags.empty()) tags.push_back({Family::Unrecognized, 0, {}});
  return tags;
}

Generated generate(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::NearPencil:
      if (tag.parameter < 4) throw RejectedInput("near pencil needs n >= 4");
      if (tag.parameter > kMaxLines) throw RejectedInput("near pencil too large");
      return {tag, near_pencil_vector(tag.parameter), near_pencil_lines(tag.parameter)};
    case Family::R1:
      if (tag.parameter < 3) throw RejectedInput("R1 needs m >= 3");
      if (2 * std::int64_t{tag.parameter} > kMaxLines) throw RejectedInput("R1 parameter too large");
      if (tag.parameter == 3) return {tag, r1_vector(3), a6_1_lines()};
      return {tag, r1_vector(tag.parameter), std::nullopt};
    case Family::R2:
      if (tag.parameter < 2) throw RejectedInput("R2 needs k >= 2");
      if (4 * std::int64_t{tag.parameter} + 1 > kMaxLines) throw RejectedInput("R2 parameter too large");
      if (tag.parameter == 2) return {tag, r2_vector(2), a9_1_lines()};
      return {tag, r2_vector(tag.parameter), std::nullopt};
    case Family::Coxeter:
      switch (tag.coxeter) {
        case CoxeterType::A61:
          return {tag, tv(6, {3, 4}), a6_1_lines()};
        case CoxeterType::A91:
          return {tag, tv(9, {6, 4, 3}), a9_1_lines()};
        case CoxeterType::A151:
          return {tag, tv(15, {15, 10, 0, 6}), std::nullopt};
      }
      break;
    case Family::A132:
      return {tag, tv(13, {12, 4, 9}), a13_2_lines()};
    case Family::KellyMoser: {
      auto lines = a6_1_lines();
      lines.push_back(L(0, 0, 1));
      return {tag, tv(7, {3, 6}), lines};
    }
    case Family::Unrecognized:
      break;
  }
  throw RejectedInput("cannot generate family " + tag.to_string());
}

bool ChamberGraph::connected() const {
  if (nodes.empty()) return true;
  std::map<int, int> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[root(index[e.a])] = root(index[e.b]);
  int r = root(0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (root(static_cast<int>(i)) != r) return false;
  }
  return true;
}

std::string ChamberGraph::canonical_form() const {
  const int k = static_cast<int>(nodes.size());
  std::map<int, int> index;
  for (int i = 0; i < k; ++i) index[nodes[i]] = i;
  std::vector<int> weight(static_cast<std::size_t>(k * k), 0);
  for (const auto& e : edges) {
    int a = index.at(e.a), b = index.at(e.b);
    weight[a * k + b] = weight[b * k + a] = e.weight;
  }
  std::ostringstream os;
  os << k << ':';
  if (k <= 8) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> code;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) code.push_back(weight[perm[i] * k + perm[j]]);
      }
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int c : best) os << c << ',';
    return os.str();
  }
  std::vector<std::vector<int>> profile(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (weight[i * k + j]) profile[i].push_back(weight[i * k + j]);
    }
    std::sort(profile[i].begin(), profile[i].end());
  }
  std::sort(profile.begin(), profile.end());
  for (const auto& p : profile) {
    os << '[';
    for (int c : p) os << c << ',';
    os << ']';
  }
  return os.str();
}

ChamberGraph chamber_graph(const WiringDiagram& w, const Chamber& chamber) {
  auto all = chambers(w);
  bool known = chamber.id >= 0 && chamber.id < static_cast<int>(all.size()) &&
               all[chamber.id].lines == chamber.lines && all[chamber.id].vertices == chamber.vertices;
  if (!known) throw RejectedInput("chamber " + std::to_string(chamber.id) + " is not a chamber of this diagram");
  return build_graph(wiring_to_arrangement(w), chamber);
}

CoxeterResult coxeter_test(const WiringDiagram& w) {
  Arrangement arr = wiring_to_arrangement(w);
  auto all = chambers(w);
  CoxeterResult r;
  std::string shape;
  for (const auto& c : all) {
    ChamberGraph g = build_graph(arr, c);
    if (!g.connected()) {
      r.detail = "chamber " + std::to_string(c.id) + " has a disconnected graph";
      return r;
    }
    std::string form = g.canonical_form();
    if (shape.empty()) {
      shape = form;
    } else if (form != shape) {
      r.detail = "chamber graphs differ (chamber " + std::to_string(c.id) + ")";
      return r;
    }
  }
  r.uniform = true;
  ChamberGraph g = build_graph(arr, all.front());
  std::vector<int> weights;
  for (const auto& e : g.edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  if (g.nodes.size() != 3 || weights.size() != 2 || weights[0] != 3) {
    r.detail = "uniform graph is not a 3-node path with a weight-3 edge: " + shape;
    return r;
  }
  r.x = weights[1];
  TVector t = t_vector(arr);
  std::optional<FamilyTag> expected;
  if (*r.x == 3) expected = FamilyTag{Family::Coxeter, 0, CoxeterType::A61};
  if (*r.x == 4) expected = FamilyTag{Family::Coxeter, 0, CoxeterType::A91};
  if (*r.x == 5) expected = FamilyTag{Family::Coxeter, 0, CoxeterType::A151};
  if (!expected) {
    r.detail = "uniform with x = " + std::to_string(*r.x) + ", outside {3,4,5}";
    return r;
  }
  Generated ref = generate(*expected);
  r.identified = expected;
  r.detail = "uniform path graph with weights 3 and " + std::to_string(*r.x) + "; t-vector " + t.to_string() +
             (t == ref.t ? " matches " : " differs from ") + expected->to_string();
  return r;
}

CoxSolution solve_cox_system(int x) {
  if (x < 4) throw RejectedInput("solve_cox_system needs x >= 4, got " + std::to_string(x));
  CoxSolution s;
  s.x = x;
  const Rational xr(x);
  // Columns t2, t3, tx, N | rhs.
  std::array<std::array<Rational, 5>, 4> a{{
      {Rational(1), Rational(0), -(xr - 3), Rational(0), Rational(3)},
      {Rational(1), Rational(3), Rational(binom2(x)), Rational(-1), Rational(0)},
      {Rational(2), Rational(-3), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(3), -xr, Rational(0), Rational(0)},
  }};
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      s.reason = "singular system";
      return s;
    }
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < 4; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (int k = col; k < 5; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  s.t2 = a[0][4] / a[0][0];
  s.t3 = a[1][4] / a[1][1];
  s.tx = a[2][4] / a[2][2];
  s.pairs = a[3][4] / a[3][3];
  for (const Rational* v : {&*s.t2, &*s.t3, &*s.tx, &*s.pairs}) {
    if (*v <= 0) {
      s.reason = "non-positive value";
      return s;
    }
    if (v->denominator() != 1) {
      s.reason = "non-integral value";
      return s;
    }
  }
  std::int64_t pairs = s.pairs->numerator();
  if (!is_perfect_square(8 * pairs + 1)) {
    s.reason = "C(n,2) = " + std::to_string(pairs) + " is not a binomial number";
    return s;
  }
  int n = static_cast<int>((1 + isqrt(8 * pairs + 1)) / 2);
  std::map<int, std::int64_t> w{{2, s.t2->numerator()}, {3, s.t3->numerator()}};
  w[x] += s.tx->numerator();
  s.n = n;
  s.t = TVector::from_weights(n, w);
  s.feasible = true;
  return s;
}

ChamberAudit double_point_chamber_audit(const WiringDiagram& w) {
  Arrangement arr = wiring_to_arrangement(w);
  TVector t = t_vector(arr);
  ChamberAudit audit;
  if (!is_simplicial(t)) {
    audit.reason = "arrangement is not simplicial";
    return audit;
  }
  if (is_trivial(t)) {
    audit.reason = "arrangement is trivial (near pencil or triangle)";
    return audit;
  }
  audit.applicable = true;
  audit.every_chamber_has_one = true;
  for (const auto& c : chambers(w)) {
    int doubles = 0;
    for (int v : c.vertices) doubles += arr.vertices[v].size() == 2 ? 1 : 0;
    audit.doubles_per_chamber.push_back(doubles);
    audit.max_doubles = std::max(audit.max_doubles, doubles);
    if (doubles == 0) audit.every_chamber_has_one = false;
  }
  return audit;
}

bool double_point_with_triple_neighbours(const WiringDiagram& w) {
  Arrangement arr = wiring_to_arrangement(w);
  auto along = vertices_along_wires(w);
  for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
    if (arr.vertices[v].size() != 2) continue;
    bool all_triple = true;
    for (int wire : arr.vertices[v]) {
      const auto& seq = along[wire];
      auto it = std::find(seq.begin(), seq.end(), static_cast<int>(v));
      std::size_t i = static_cast<std::size_t>(it - seq.begin());
      std::size_t prev = (i + seq.size() - 1) % seq.size();
      std::size_t next = (i + 1) % seq.size();
      if (arr.vertices[seq[prev]].size() != 3 || arr.vertices[seq[next]].size() != 3) all_triple = false;
    }
    if (all_triple) return true;
  }
  return false;
}

}  // namespace pla
