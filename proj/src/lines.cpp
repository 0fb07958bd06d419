#include "pla/lines.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pla {

namespace {

using Vec = std::array<BigInt, 3>;

Vec cross(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

BigInt dot(const Vec& u, const Vec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool is_zero(const Vec& u) { return u[0] == 0 && u[1] == 0 && u[2] == 0; }

// Primitive representative with positive first nonzero entry.
Vec primitive(Vec u) {
  BigInt g = 0;
  for (const auto& x : u) g = boost::multiprecision::gcd(g, BigInt(abs(x)));
  if (g == 0) return u;
  for (auto& x : u) x /= g;
  for (const auto& x : u) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : u) y = -y;
    }
    break;
  }
  return u;
}

Vec to_integer(const RationalLine& line) {
  const BigRational* parts[3] = {&line.a(), &line.b(), &line.c()};
  BigInt l = 1;
  for (const auto* p : parts) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(*p)));
  Vec out;
  for (int i = 0; i < 3; ++i) {
    out[i] = boost::multiprecision::numerator(*parts[i]) * (l / boost::multiprecision::denominator(*parts[i]));
  }
  return primitive(out);
}

struct Vertex {
  Vec point;
  std::vector<int> lines;
};

std::vector<Vertex> intersect_all(const std::vector<Vec>& lines) {
  const int n = static_cast<int>(lines.size());
  std::map<Vec, std::vector<int>> by_point;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto& ids = by_point[primitive(cross(lines[i], lines[j]))];
      if (std::find(ids.begin(), ids.end(), i) == ids.end()) ids.push_back(i);
      if (std::find(ids.begin(), ids.end(), j) == ids.end()) ids.push_back(j);
    }
  }
  std::vector<Vertex> out;
  for (auto& [p, ids] : by_point) {
    std::sort(ids.begin(), ids.end());
    out.push_back({p, ids});
  }
  return out;
}

std::vector<Vec> checked_lines(const std::vector<RationalLine>& lines) {
  if (lines.size() < 3) throw RejectedInput("need at least 3 lines, got " + std::to_string(lines.size()));
  if (lines.size() > static_cast<std::size_t>(kMaxLines)) throw RejectedInput("too many lines");
  std::vector<Vec> ints;
  for (const auto& l : lines) ints.push_back(to_integer(l));
  for (std::size_t i = 0; i < ints.size(); ++i) {
    for (std::size_t j = i + 1; j < ints.size(); ++j) {
      if (ints[i] == ints[j]) {
        throw RejectedInput("lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  return ints;
}

// boost::rational over cpp_int rejects a negative denominator in its
// constructor, so the sign is moved to the numerator first.
BigRational ratio(const BigInt& num, const BigInt& den) {
  return den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

}  // namespace

RationalLine::RationalLine(BigRational a, BigRational b, BigRational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  BigRational lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead == 0) throw RejectedInput("line with all coefficients zero");
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

Arrangement lines_to_arrangement(const std::vector<RationalLine>& lines) {
  auto ints = checked_lines(lines);
  Arrangement arr;
  arr.n = static_cast<int>(ints.size());
  for (auto& v : intersect_all(ints)) {
    if (v.lines.size() == ints.size()) throw PencilError("all lines pass through one point");
    arr.vertices.push_back(std::move(v.lines));
  }
  return arr.canonical();
}

LineWiring lines_to_wiring(const std::vector<RationalLine>& lines) {
  auto ints = checked_lines(lines);
  const int n = static_cast<int>(ints.size());
  auto vertices = intersect_all(ints);
  for (const auto& v : vertices) {
    if (v.lines.size() == ints.size()) throw PencilError("all lines pass through one point");
  }

  // New line at infinity: first of (1,k,k^2) missing every vertex.
  Vec far;
  for (long k = 0;; ++k) {
    far = {BigInt(1), BigInt(k), BigInt(k * k)};
    bool clear = std::all_of(vertices.begin(), vertices.end(), [&](const Vertex& v) { return dot(far, v.point) != 0; });
    if (clear) break;
  }

  // Two independent points on it; walk O = p + k q until O is on no input line.
  std::vector<Vec> on_far;
  for (int axis = 0; axis < 3; ++axis) {
    Vec e{BigInt(0), BigInt(0), BigInt(0)};
    e[axis] = 1;
    Vec p = cross(far, e);
    if (is_zero(p)) continue;
    if (on_far.empty() || !is_zero(cross(on_far.front(), p))) on_far.push_back(p);
    if (on_far.size() == 2) break;
  }
  Vec origin;
  for (long k = 0;; ++k) {
    for (int i = 0; i < 3; ++i) origin[i] = on_far[0][i] + BigInt(k) * on_far[1][i];
    bool clear = std::all_of(ints.begin(), ints.end(), [&](const Vec& l) { return dot(l, origin) != 0; });
    if (clear) break;
  }

  // Affine chart x = X/Z, y = Y/Z with Z the new infinity and X vanishing on
  // the direction `origin`, so vertical lines are those through it.
  Vec x_form;
  for (int axis = 0; axis < 3; ++axis) {
    Vec e{BigInt(0), BigInt(0), BigInt(0)};
    e[axis] = 1;
    x_form = cross(origin, e);
    if (!is_zero(x_form) && !is_zero(cross(x_form, far))) break;
  }
  const Vec& y_form = origin;
  const Vec& z_form = far;
  const Vec yz = cross(y_form, z_form);
  const Vec zx = cross(z_form, x_form);

  // Left end, top to bottom: ascending slope.
  std::vector<BigRational> slope(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) slope[i] = -ratio(dot(ints[i], yz), dot(ints[i], zx));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return slope[a] < slope[b]; });
  std::vector<int> wire_of(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) wire_of[order[k]] = k;

  struct Event {
    BigRational x, y;
    std::vector<int> wires;
  };
  std::vector<Event> events;
  for (const auto& v : vertices) {
    BigInt z = dot(z_form, v.point);
    Event e{ratio(dot(x_form, v.point), z), ratio(dot(y_form, v.point), z), {}};
    for (int l : v.lines) e.wires.push_back(wire_of[l]);
    events.push_back(std::move(e));
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y > b.y;
  });

  LineWiring out;
  out.wiring.n = n;
  out.wire_to_line = order;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& e : events) {
    int lo = n, hi = -1;
    for (int wire : e.wires) {
      lo = std::min(lo, pos[wire]);
      hi = std::max(hi, pos[wire]);
    }
    if (hi - lo + 1 != static_cast<int>(e.wires.size())) {
      throw std::logic_error("sweep found non-adjacent wires at a vertex");
    }
    std::reverse(perm.begin() + lo, perm.begin() + hi + 1);
    for (int p = lo; p <= hi; ++p) pos[perm[p]] = p;
    out.wiring.moves.push_back({lo, hi});
  }
  return out;
}

}  // namespace pla
