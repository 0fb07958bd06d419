#include "pla/charpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "pla/rational.hpp"

namespace pla {

namespace {

std::string linear_factor(std::int64_t root) {
  if (root == 0) return "t";
  if (root > 0) return "(t-" + std::to_string(root) + ")";
  return "(t+" + std::to_string(-root) + ")";
}

QuadraticSurd make_surd(std::int64_t a, std::int64_t b, std::int64_t radicand, std::int64_t den) {
  if (b != 0 && radicand >= 0 && is_perfect_square(radicand)) {
    a += b * isqrt(radicand);
    b = 0;
  }
  if (b == 0) radicand = 0;
  std::int64_t g = std::gcd(std::gcd(a, b), den);
  if (g > 1) {
    a /= g;
    b /= g;
    den /= g;
  }
  return {a, b, radicand, den};
}

}  // namespace

std::int64_t CharPoly::discriminant() const { return (std::int64_t{n} + 1) * (n + 1) - 4 * f2; }

std::int64_t CharPoly::evaluate(std::int64_t t) const {
  return ((coeffs[3] * t + coeffs[2]) * t + coeffs[1]) * t + coeffs[0];
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  os << "t^3";
  auto term = [&os](std::int64_t c, const char* power) {
    if (c == 0) return;
    os << (c < 0 ? " - " : " + ");
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || power[0] == '\0') os << a;
    os << power;
  };
  term(coeffs[2], "t^2");
  term(coeffs[1], "t");
  term(coeffs[0], "");
  return os.str();
}

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (b == 0) {
    if (den == 1) {
      os << a;
    } else {
      os << a << '/' << den;
    }
    return os.str();
  }
  os << '(' << a << (b < 0 ? "-" : "+");
  std::int64_t mag = b < 0 ? -b : b;
  if (mag != 1) os << mag;
  os << "√" << radicand << ')';
  if (den != 1) os << '/' << den;
  return os.str();
}

CharPoly charpoly_from_lattice(const Arrangement& arr) {
  auto report = validate_arrangement(arr);
  if (!report.ok()) {
    if (report.has(IssueKind::Pencil)) throw PencilError("pencil arrangement");
    throw RejectedInput("invalid arrangement: " + report.issues.front().message);
  }
  struct Flat {
    std::vector<int> lines;
    int rank;
  };
  std::vector<Flat> flats;
  flats.push_back({{}, 0});
  for (int i = 0; i < arr.n; ++i) flats.push_back({{i}, 1});
  for (const auto& v : arr.vertices) {
    auto ids = v;
    std::sort(ids.begin(), ids.end());
    flats.push_back({ids, 2});
  }
  std::vector<int> all(static_cast<std::size_t>(arr.n));
  std::iota(all.begin(), all.end(), 0);
  flats.push_back({all, 3});

  // Flats are listed by rank, so every proper subflat precedes X.
  std::vector<std::int64_t> mu(flats.size(), 0);
  std::array<std::int64_t, 4> coeffs{};
  for (std::size_t x = 0; x < flats.size(); ++x) {
    if (x == 0) {
      mu[x] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t y = 0; y < x; ++y) {
        if (flats[y].rank >= flats[x].rank) continue;
        const auto& small = flats[y].lines;
        const auto& big = flats[x].lines;
        if (std::includes(big.begin(), big.end(), small.begin(), small.end())) sum += mu[y];
      }
      mu[x] = -sum;
    }
    coeffs[static_cast<std::size_t>(3 - flats[x].rank)] += mu[x];
  }
  return CharPoly{arr.n, coeffs[1] + 1, coeffs};
}

CharPoly charpoly_closed_form(int n, std::int64_t f2) {
  if (n < 3) throw RejectedInput("characteristic polynomial needs n >= 3");
  if (f2 < 4) throw RejectedInput("characteristic polynomial needs f2 >= 4");
  return CharPoly{n, f2, {n - f2, f2 - 1, -std::int64_t{n}, 1}};
}

RootAnalysis root_analysis(const CharPoly& p) {
  RootAnalysis r;
  r.m = p.discriminant();
  r.splits = r.m >= 0;
  r.upper = make_surd(p.n - 1, 1, r.m, 2);
  r.lower = make_surd(p.n - 1, -1, r.m, 2);
  r.integral = r.splits && is_perfect_square(r.m) && ((p.n - 1) - isqrt(r.m)) % 2 == 0;
  if (r.integral) {
    std::int64_t lo = r.lower.integer_value();
    std::int64_t hi = r.upper.integer_value();
    std::vector<std::int64_t> roots{1, lo, hi};
    std::sort(roots.begin(), roots.end());
    for (auto x : roots) r.text += linear_factor(x);
  } else {
    r.text = "roots: 1, (" + std::to_string(p.n - 1) + "±√" + std::to_string(r.m) + ")/2";
  }
  return r;
}

bool splits_over_R(const TVector& t) {
  FVector f = f_vector(t);
  return (std::int64_t{t.n()} + 1) * (t.n() + 1) - 4 * f.f2 >= 0;
}

}  // namespace pla
