#include "pla/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pla {

namespace {

__extension__ typedef __int128 i128;
using i64 = std::int64_t;

// const + sum_w b[w] t_w >= 0 over t2 and t4..tm, with t3 substituted from
// the pair-counting identity. b[0], b[1], b[3] stay 0.
struct Row {
  i64 c = 0;
  std::vector<i64> b;
};

i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

void normalize(Row& r) {
  i64 g = 0;
  for (i64 v : r.b) g = std::gcd(g, v < 0 ? -v : v);
  if (g <= 1) return;
  for (i64& v : r.b) v /= g;
  r.c = floor_div(r.c, g);
}

// Rewrites form (direction Ge or Gt, already sign-adjusted) as an integer row.
Row make_row(const LinearForm& f, bool strict, int n, int m) {
  const Rational pairs(binom2(n));
  auto a = [&f](int w) { return w < static_cast<int>(f.coef.size()) ? f.coef[w] : Rational(0); };
  Rational a3 = a(3);
  std::vector<Rational> q(static_cast<std::size_t>(m + 1), Rational(0));
  Rational c = f.constant + a3 * pairs / 3;
  q[2] = a(2) - a3 / 3;
  for (int w = 4; w <= m; ++w) q[w] = a(w) - a3 * Rational(binom2(w)) / 3;
  i64 den = c.denominator();
  for (const auto& v : q) den = lcm64(den, v.denominator());
  Row r;
  r.c = (c * den).numerator();
  r.b.assign(q.size(), 0);
  for (std::size_t w = 0; w < q.size(); ++w) r.b[w] = (q[w] * den).numerator();
  if (strict) r.c -= 1;
  normalize(r);
  return r;
}

LinearForm negated(LinearForm f) {
  f.constant = -f.constant;
  for (auto& v : f.coef) v = -v;
  return f;
}

void add_rows(std::vector<Row>& rows, const LinearForm& f, Direction d, int n, int m) {
  switch (d) {
    case Direction::Ge:
      rows.push_back(make_row(f, false, n, m));
      break;
    case Direction::Gt:
      rows.push_back(make_row(f, true, n, m));
      break;
    case Direction::Eq:
      rows.push_back(make_row(f, false, n, m));
      rows.push_back(make_row(negated(f), false, n, m));
      break;
    case Direction::NotCongruent:
      break;
  }
}

LinearForm unit_form(int m, int w, i64 constant) {
  LinearForm f;
  f.coef.assign(static_cast<std::size_t>(std::max(m, 3) + 1), Rational(0));
  f.coef[w] = 1;
  f.constant = constant;
  return f;
}

struct Fraction {
  i64 num = 0;
  i64 den = 1;
};

bool less(const Fraction& a, const Fraction& b) { return i128(a.num) * b.den < i128(b.num) * a.den; }

struct Level {
  int m = 0;
  std::vector<Row> rows;  // involve t2
  std::vector<Row> fm;    // t2 eliminated pairwise
  std::vector<std::string> deferred;
  Facts facts;
  std::vector<int> vars;                    // m, m-1, ..., 4
  std::vector<std::vector<Fraction>> best;  // [row][depth]: best gain per unit of capacity after vars[depth]
};

Level plan_level(const FeasibilityQuery& q, const std::vector<std::string>& active, int m) {
  const int n = q.n;
  Level L;
  L.m = m;
  L.facts = query_facts(q, m);
  std::vector<Row>& rows = L.rows;
  add_rows(rows, unit_form(m, 2, 0), Direction::Ge, n, m);
  add_rows(rows, unit_form(m, 3, 0), Direction::Ge, n, m);
  if (m == 3) add_rows(rows, unit_form(m, 3, -1), Direction::Ge, n, m);
  if (m == 2) add_rows(rows, unit_form(m, 3, 0), Direction::Eq, n, m);
  if (q.require_simplicial) {
    LinearForm f = unit_form(m, 2, -3);
    for (int w = 4; w <= m; ++w) f.coef[w] = -(w - 3);
    add_rows(rows, f, Direction::Eq, n, m);
  }
  if (q.fixed_t2) add_rows(rows, unit_form(m, 2, -*q.fixed_t2), Direction::Eq, n, m);
  for (const auto& cr : q.custom) {
    if (cr.direction == Direction::NotCongruent) throw RejectedInput("custom row '" + cr.label + "' must be linear");
    add_rows(rows, cr.form, cr.direction, n, m);
  }
  for (const auto& name : active) {
    bool defer = false;
    for (const auto& part : linear_parts(name, n, m, L.facts)) {
      if (part.applies == Tri::No) continue;
      if (part.applies == Tri::Unknown || !part.form || part.direction == Direction::NotCongruent) {
        defer = true;
        continue;
      }
      add_rows(rows, *part.form, part.direction, n, m);
    }
    if (defer) L.deferred.push_back(name);
  }
  for (const auto& p : rows) {
    if (p.b[2] <= 0) continue;
    for (const auto& r : rows) {
      if (r.b[2] >= 0) continue;
      Row e;
      e.c = -r.b[2] * p.c + p.b[2] * r.c;
      e.b.assign(p.b.size(), 0);
      for (std::size_t w = 0; w < e.b.size(); ++w) e.b[w] = -r.b[2] * p.b[w] + p.b[2] * r.b[w];
      normalize(e);
      bool constant = std::all_of(e.b.begin(), e.b.end(), [](i64 v) { return v == 0; });
      if (constant && e.c >= 0) continue;
      L.fm.push_back(std::move(e));
    }
  }
  for (int w = m; w >= 4; --w) L.vars.push_back(w);
  auto all_rows = L.rows;
  all_rows.insert(all_rows.end(), L.fm.begin(), L.fm.end());
  for (const auto& r : all_rows) {
    std::vector<Fraction> best(L.vars.size());
    Fraction acc{std::max<i64>(r.b[2], 0), 1};
    for (std::size_t d = L.vars.size(); d-- > 0;) {
      best[d] = acc;
      int w = L.vars[d];
      Fraction here{std::max<i64>(r.b[w], 0), binom2(w)};
      if (less(acc, here)) acc = here;
    }
    L.best.push_back(std::move(best));
  }
  return L;
}

class Walker {
 public:
  Walker(const FeasibilityQuery& q, const Level& level, const FeasibleVisitor& visit, EnumerateOptions options,
         EnumerationStats& stats)
      : q_(q), L_(level), visit_(visit), prune_(options.prune), stats_(stats) {
    all_ = L_.rows;
    all_.insert(all_.end(), L_.fm.begin(), L_.fm.end());
    t_.assign(static_cast<std::size_t>(std::max(L_.m, 3) + 1), 0);
    partial_.assign(L_.vars.size() + 1, std::vector<i64>(all_.size(), 0));
    for (std::size_t r = 0; r < all_.size(); ++r) partial_[0][r] = all_[r].c;
  }

  void run() { descend(0, binom2(q_.n)); }

 private:
  void descend(std::size_t depth, i64 cap) {
    if (depth == L_.vars.size()) {
      finish(depth, cap);
      return;
    }
    const int k = L_.vars[depth];
    const i64 w = binom2(k);
    const i64 lo0 = depth == 0 ? 1 : 0;
    const i64 hi0 = cap / w;
    i64 lo = lo0, hi = hi0;
    if (prune_) {
      const auto& P = partial_[depth];
      for (std::size_t r = 0; r < all_.size() && lo <= hi; ++r) {
        const Fraction& f = L_.best[r][depth];
        i128 A = i128(f.den) * all_[r].b[k] - i128(f.num) * w;
        i128 B = i128(f.den) * P[r] + i128(f.num) * cap;
        if (A > 0) {
          lo = std::max<i64>(lo, static_cast<i64>(ceil_div128(-B, A)));
        } else if (A < 0) {
          hi = std::min<i64>(hi, static_cast<i64>(floor_div128(B, -A)));
        } else if (B < 0) {
          hi = lo - 1;
        }
      }
    }
    const i64 natural = hi0 >= lo0 ? hi0 - lo0 + 1 : 0;
    const i64 kept = hi >= lo ? hi - lo + 1 : 0;
    stats_.pruned += static_cast<std::uint64_t>(natural - kept);
    for (i64 v = lo; v <= hi; ++v) {
      ++stats_.nodes;
      t_[k] = v;
      auto& next = partial_[depth + 1];
      const auto& P = partial_[depth];
      for (std::size_t r = 0; r < all_.size(); ++r) next[r] = P[r] + all_[r].b[k] * v;
      descend(depth + 1, cap - w * v);
    }
    t_[k] = 0;
  }

  void finish(std::size_t depth, i64 cap) {
    const auto& P = partial_[depth];
    i64 lo = 0, hi = cap;
    if (prune_) {
      for (std::size_t r = 0; r < L_.rows.size() && lo <= hi; ++r) {
        i64 b = L_.rows[r].b[2];
        if (b > 0) {
          lo = std::max(lo, ceil_div(-P[r], b));
        } else if (b < 0) {
          hi = std::min(hi, floor_div(P[r], -b));
        } else if (P[r] < 0) {
          hi = lo - 1;
        }
      }
    }
    // 3 t3 = cap - t2.
    const i64 residue = cap % 3;
    auto first_at_least = [residue](i64 x) { return x + ((residue - x) % 3 + 3) % 3; };
    auto count = [&](i64 a, i64 b) -> i64 {
      if (b < a) return 0;
      i64 s = first_at_least(a);
      return s > b ? 0 : (b - s) / 3 + 1;
    };
    stats_.pruned += static_cast<std::uint64_t>(count(0, cap) - count(lo, hi));
    if (hi < lo) return;
    for (i64 t2 = first_at_least(lo); t2 <= hi; t2 += 3) {
      ++stats_.nodes;
      ++stats_.leaves;
      if (!prune_) {
        bool ok = true;
        for (std::size_t r = 0; r < L_.rows.size() && ok; ++r) ok = P[r] + L_.rows[r].b[2] * t2 >= 0;
        if (!ok) continue;
      }
      t_[2] = t2;
      t_[3] = (cap - t2) / 3;
      if (!L_.deferred.empty() && !deferred_ok()) continue;
      ++stats_.feasible;
      visit_(L_.m, std::span<const i64>(t_.data(), static_cast<std::size_t>(L_.m + 1)));
    }
    t_[2] = t_[3] = 0;
  }

  bool deferred_ok() const {
    TVector t(q_.n, std::vector<i64>(t_.begin() + 2, t_.begin() + L_.m + 1));
    for (const auto& name : L_.deferred) {
      if (check(name, q_.n, t, L_.facts).verdict == Verdict::Fail) return false;
    }
    return true;
  }

  static i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

  const FeasibilityQuery& q_;
  const Level& L_;
  const FeasibleVisitor& visit_;
  bool prune_;
  EnumerationStats& stats_;
  std::vector<Row> all_;
  std::vector<i64> t_;
  std::vector<std::vector<i64>> partial_;
};

}  // namespace

void validate_query(const FeasibilityQuery& q) {
  if (q.n < 3) throw RejectedInput("enumeration needs n >= 3, got " + std::to_string(q.n));
  if (q.n > kMaxLines) throw RejectedInput("n exceeds " + std::to_string(kMaxLines));
  const int mm = q.effective_max_mult();
  if (mm < 2) throw RejectedInput("max_mult must be >= 2, got " + std::to_string(mm));
  if (mm > q.n - 1) {
    throw RejectedInput("max_mult " + std::to_string(mm) + " exceeds n - 1 = " + std::to_string(q.n - 1));
  }
  for (const auto& name : q.extra) {
    if (!is_constraint(name)) throw UnknownName("unknown constraint '" + name + "'");
  }
  if (q.fixed_t2 && *q.fixed_t2 < 0) throw RejectedInput("fixed t2 must be non-negative");
}

std::vector<std::string> active_constraints(const FeasibilityQuery& q) {
  std::vector<std::string> out{"melchior"};
  if (q.require_splits) out.push_back("f2-le-quarter");
  if (q.require_four_t2_le_f2) out.push_back("four-t2-le-f2");
  for (const auto& name : q.extra) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

bool excludes_trivial(const FeasibilityQuery& q) {
  for (const auto& name : active_constraints(q)) {
    for (const auto& info : catalogue()) {
      if (info.name != name) continue;
      if (info.applicability == Applicability::SimplicialNontrivial ||
          info.applicability == Applicability::SimplicialAndSplits) {
        return true;
      }
    }
  }
  return false;
}

Facts query_facts(const FeasibilityQuery& q, int m) {
  Facts f;
  if (q.require_simplicial) f.simplicial = true;
  if (q.require_splits) f.splits = true;
  f.stretchable = false;
  f.trivial = m == q.n - 1;
  f.include_external = q.include_external;
  return f;
}

EnumerationStats for_each_feasible(const FeasibilityQuery& q, const FeasibleVisitor& visit, EnumerateOptions options) {
  validate_query(q);
  const auto active = active_constraints(q);
  const bool drop_trivial = excludes_trivial(q);
  EnumerationStats stats;
  for (int m = 2; m <= q.effective_max_mult(); ++m) {
    if (drop_trivial && m == q.n - 1) continue;
    Level level = plan_level(q, active, m);
    Walker(q, level, visit, options, stats).run();
  }
  return stats;
}

FeasibleSet enumerate(const FeasibilityQuery& q, EnumerateOptions options) {
  FeasibleSet out;
  out.query = q;
  std::vector<std::vector<i64>> raw;
  out.stats = for_each_feasible(
      q, [&raw](int, std::span<const i64> t) { raw.emplace_back(t.begin() + 2, t.end()); }, options);
  const int M = q.effective_max_mult();
  for (auto& v : raw) v.resize(static_cast<std::size_t>(M - 1), 0);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  out.vectors.reserve(raw.size());
  for (auto& v : raw) out.vectors.emplace_back(q.n, std::move(v));
  return out;
}

ScanResult scan_bound(const FeasibilityQuery& base, int n_from, int n_to, EnumerateOptions options) {
  if (n_from > n_to) {
    throw RejectedInput("empty n-range [" + std::to_string(n_from) + ", " + std::to_string(n_to) + "]");
  }
  if (n_from < 3) throw RejectedInput("scan needs n >= 3");
  ScanResult result;
  for (int n = n_from; n <= n_to; ++n) {
    FeasibilityQuery q = base;
    q.n = n;
    if (q.max_mult) q.max_mult = std::min(*q.max_mult, n - 1);
    ScanRow row{n, for_each_feasible(q, [](int, std::span<const i64>) {}, options)};
    if (row.stats.feasible > 0) {
      if (!result.first_feasible) result.first_feasible = n;
      result.last_feasible = n;
    }
    result.rows.push_back(row);
  }
  return result;
}

bool epsilon_admissible(const Rational& eps) {
  if (eps <= 0) return false;
  // eps <= (72/11)(6 sqrt 15 - 1)  <=>  (11 eps + 72)^2 <= 540 * 72^2.
  Rational s = eps * 11 + 72;
  return s * s <= Rational(540 * 72 * 72);
}

FeasibilityQuery epsilon_query(int n, const Rational& eps) {
  FeasibilityQuery q;
  q.n = n;
  q.max_mult = std::min(6, n - 1);
  q.require_simplicial = true;
  q.require_splits = true;
  q.require_four_t2_le_f2 = true;
  CustomRow row;
  row.label = "t2 <= 24/(16+eps) t3";
  row.form.coef.assign(4, Rational(0));
  row.form.coef[2] = -1;
  row.form.coef[3] = Rational(24) / (eps + 16);
  q.custom.push_back(row);
  return q;
}

EpsilonBound epsilon_bound(const Rational& eps, int window) {
  if (!epsilon_admissible(eps)) {
    throw RejectedInput("eps = " + to_string(eps) + " outside (0, (72/11)(6 sqrt(15) - 1)]");
  }
  if (window < 0) throw RejectedInput("window must be non-negative");
  EpsilonBound b;
  b.eps = eps;
  b.radicand = Rational(254016) - eps * eps * 11 - eps * 144;
  b.offset = eps * 5 + 1008;
  // N <= (2 sqrt(D) + X)/eps  <=>  N eps - X <= 0  or  (N eps - X)^2 <= 4 D.
  auto within = [&b](i64 N) {
    Rational lhs = b.eps * N - b.offset;
    return lhs <= 0 || lhs * lhs <= b.radicand * 4;
  };
  long double approx = (2.0L * std::sqrt(static_cast<long double>(boost::rational_cast<long double>(b.radicand))) +
                        boost::rational_cast<long double>(b.offset)) /
                       boost::rational_cast<long double>(eps);
  i64 N = static_cast<i64>(approx);
  while (!within(N)) --N;
  while (within(N + 1)) ++N;
  b.floor_bound = N;
  b.text = "n <= (2*sqrt(" + to_string(b.radicand) + ") + " + to_string(b.offset) + ")/" + to_string(eps) +
           ", floor " + std::to_string(N);
  b.window_from = static_cast<int>(N + 1);
  b.window_to = static_cast<int>(N + window);
  for (int n = b.window_from; n <= b.window_to; ++n) {
    auto stats = for_each_feasible(epsilon_query(n, eps), [](int, std::span<const i64>) {});
    b.window_feasible += stats.feasible;
  }
  return b;
}

RatioReport conjecture_ratio_check(const std::vector<TVector>& vectors) {
  RatioReport report;
  for (const auto& t : vectors) {
    const i64 n = t.n();
    RatioEntry e;
    e.n = t.n();
    e.t = t;
    e.ratio = Rational(t[6], n * n);
    e.lower = Rational(n * n - 46 * n + 225, 48 * n * n);
    e.upper = Rational(n * n + 2 * n - 47, 48 * n * n);
    e.within = e.lower <= e.ratio && e.ratio <= e.upper;
    if (!e.within) ++report.violations;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace pla
