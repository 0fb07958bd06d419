#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "pla/feasibility.hpp"
#include "pla/families.hpp"

using namespace pla;

namespace {

// Every t-vector on n lines (pencil excluded): all solutions of the pair count
// with weights 2..n-1, t2 taking the remainder.
std::vector<TVector> all_tvectors(int n) {
  std::vector<TVector> out;
  std::vector<std::int64_t> t(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int, std::int64_t)> rec = [&](int w, std::int64_t left) {
    if (w == 2) {
      t[2] = left;
      out.emplace_back(n, std::vector<std::int64_t>(t.begin() + 2, t.end()));
      return;
    }
    for (std::int64_t k = 0; k * binom2(w) <= left; ++k) {
      t[static_cast<std::size_t>(w)] = k;
      rec(w - 1, left - k * binom2(w));
    }
    t[static_cast<std::size_t>(w)] = 0;
  };
  rec(n - 1, binom2(n));
  return out;
}

// Direct evaluation of the query on one vector, written from the definitions.
bool oracle_accepts(const FeasibilityQuery& q, const TVector& t) {
  const int n = q.n;
  const int m = t.multiplicity();
  if (m > q.effective_max_mult()) return false;
  std::int64_t melchior_rhs = 3;
  for (int w = 4; w <= m; ++w) melchior_rhs += (w - 3) * t[w];
  if (t[2] < melchior_rhs) return false;
  const bool simplicial = t[2] == melchior_rhs;
  const bool trivial = t[n - 1] > 0;
  const std::int64_t f2 = f_vector(t).f2;
  if (q.require_simplicial && !simplicial) return false;
  if (q.require_splits && 4 * f2 > (n + 1) * (n + 1)) return false;
  if (q.require_four_t2_le_f2) {
    if (trivial) return false;
    if (simplicial && 4 * t[2] > f2) return false;
  }
  if (q.fixed_t2 && t[2] != *q.fixed_t2) return false;
  for (const auto& row : q.custom) {
    Rational v = row.form.constant;
    for (std::size_t w = 2; w < row.form.coef.size(); ++w) v += row.form.coef[w] * t[static_cast<int>(w)];
    if (row.direction == Direction::Ge && v < 0) return false;
    if (row.direction == Direction::Gt && v <= 0) return false;
    if (row.direction == Direction::Eq && v != 0) return false;
  }
  if (excludes_trivial(q) && trivial) return false;
  for (const auto& name : q.extra) {
    if (check(name, n, t, query_facts(q, m)).verdict == Verdict::Fail) return false;
  }
  return true;
}

std::vector<TVector> sorted(std::vector<TVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<FeasibilityQuery> profiles(int n) {
  std::vector<FeasibilityQuery> qs;
  FeasibilityQuery q;
  q.n = n;
  qs.push_back(q);
  q.require_simplicial = true;
  qs.push_back(q);
  q.require_simplicial = false;
  q.require_splits = true;
  qs.push_back(q);
  q.require_simplicial = true;
  q.require_four_t2_le_f2 = true;
  qs.push_back(q);
  FeasibilityQuery dm;
  dm.n = n;
  dm.require_splits = true;
  dm.max_mult = std::min(5, n - 1);
  dm.extra = {"dm-lower-bound"};
  qs.push_back(dm);
  FeasibilityQuery half;
  half.n = n;
  half.require_simplicial = true;
  half.extra = {"mult-half", "t2-upper-seventh"};
  qs.push_back(half);
  FeasibilityQuery fixed;
  fixed.n = n;
  fixed.require_splits = true;
  fixed.fixed_t2 = n / 2;
  qs.push_back(fixed);
  FeasibilityQuery custom;
  custom.n = n;
  LinearForm f;
  f.coef = {Rational(0), Rational(0), Rational(-1), Rational(1)};
  custom.custom.push_back({"t3 >= t2", f, Direction::Ge});
  qs.push_back(custom);
  FeasibilityQuery ext;
  ext.n = n;
  ext.require_splits = true;
  ext.include_external = true;
  ext.max_mult = std::min(5, n - 1);
  ext.extra = {"ext-shnu2", "notsimp-11"};
  qs.push_back(ext);
  return qs;
}

bool contains(const FeasibleSet& s, const TVector& t) {
  return std::find(s.vectors.begin(), s.vectors.end(), t) != s.vectors.end();
}

}  // namespace

TEST_SUITE("feasibility") {
  TEST_CASE("agrees with a full grid search for small n") {
    for (int n = 3; n <= 13; ++n) {
      auto grid = all_tvectors(n);
      for (const auto& q : profiles(n)) {
        CAPTURE(n);
        CAPTURE(q.require_simplicial);
        CAPTURE(q.require_splits);
        CAPTURE(q.extra.size());
        std::vector<TVector> expected;
        for (const auto& t : grid) {
          if (oracle_accepts(q, t)) expected.push_back(t);
        }
        FeasibleSet pruned = enumerate(q);
        CHECK(sorted(pruned.vectors) == sorted(expected));
        CHECK(pruned.stats.feasible == expected.size());
        FeasibleSet plain = enumerate(q, EnumerateOptions{false});
        CHECK(plain.vectors == pruned.vectors);
        CHECK(plain.stats.pruned == 0);
      }
    }
  }

  TEST_CASE("output order is ascending by descending weight") {
    FeasibilityQuery q;
    q.n = 12;
    q.require_splits = true;
    auto v = enumerate(q).vectors;
    REQUIRE(v.size() > 1);
    auto key = [](const TVector& t) {
      std::vector<std::int64_t> k;
      for (int w = t.n() - 1; w >= 2; --w) k.push_back(t[w]);
      return k;
    };
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(key(v[i - 1]) < key(v[i]));
  }

  TEST_CASE("documented instances") {
    FeasibilityQuery q;
    q.n = 13;
    q.max_mult = 4;
    q.require_simplicial = q.require_splits = q.require_four_t2_le_f2 = true;
    CHECK(contains(enumerate(q), TVector(13, {12, 4, 9})));
    FeasibilityQuery six;
    six.n = 6;
    six.max_mult = 3;
    six.require_simplicial = six.require_splits = true;
    CHECK(contains(enumerate(six), TVector(6, {3, 4})));
    q.n = 17;
    CHECK(enumerate(q).vectors.empty());
  }

  TEST_CASE("soundness against the constraint catalogue") {
    for (int n = 14; n <= 22; ++n) {
      for (const auto& q : profiles(n)) {
        auto active = active_constraints(q);
        for_each_feasible(q, [&](int m, std::span<const std::int64_t> t) {
          TVector v(n, std::vector<std::int64_t>(t.begin() + 2, t.end()));
          CHECK(v.multiplicity() == m);
          for (const auto& name : active) {
            Certificate c = check(name, n, v, query_facts(q, m));
            if (c.verdict == Verdict::Fail) FAIL_CHECK(name << " fails on " << v.to_string());
          }
          if (q.require_simplicial) CHECK(is_simplicial(v));
        });
      }
    }
  }

  TEST_CASE("no t4 = 2 mod 3 among simplicial vectors of multiplicity <= 6") {
    for (int n = 7; n <= 30; ++n) {
      FeasibilityQuery q;
      q.n = n;
      q.max_mult = std::min(6, n - 1);
      q.require_simplicial = true;
      for_each_feasible(q, [&](int, std::span<const std::int64_t> t) {
        if (t.size() > 4) CHECK(t[4] % 3 != 2);
      });
    }
  }

  TEST_CASE("fixing t2 to n/2 leaves only the first infinite family") {
    for (int n = 6; n <= 30; n += 2) {
      FeasibilityQuery q;
      q.n = n;
      q.require_simplicial = q.require_splits = true;
      q.extra = {"mult-half"};
      q.fixed_t2 = n / 2;
      auto v = enumerate(q).vectors;
      REQUIRE(v.size() == 1);
      CHECK(v.front() == generate(FamilyTag{Family::R1, n / 2}).t);
    }
  }

  TEST_CASE("query errors") {
    FeasibilityQuery q;
    q.n = 2;
    CHECK_THROWS_AS(validate_query(q), RejectedInput);
    q.n = 10;
    q.max_mult = 10;
    CHECK_THROWS_AS(enumerate(q), RejectedInput);
    q.max_mult = 1;
    CHECK_THROWS_AS(enumerate(q), RejectedInput);
    q.max_mult.reset();
    q.fixed_t2 = -1;
    CHECK_THROWS_AS(enumerate(q), RejectedInput);
    q.fixed_t2.reset();
    q.extra = {"bogus"};
    CHECK_THROWS_AS(enumerate(q), UnknownName);
    FeasibilityQuery base;
    base.n = 6;
    CHECK_THROWS_AS(scan_bound(base, 10, 9), RejectedInput);
    CHECK_THROWS_AS(scan_bound(base, 2, 9), RejectedInput);
  }

  TEST_CASE("active constraints and trivial exclusion") {
    FeasibilityQuery q;
    q.n = 9;
    CHECK(active_constraints(q) == std::vector<std::string>{"melchior"});
    CHECK(!excludes_trivial(q));
    q.require_splits = q.require_four_t2_le_f2 = true;
    CHECK(active_constraints(q) == std::vector<std::string>{"melchior", "f2-le-quarter", "four-t2-le-f2"});
    CHECK(excludes_trivial(q));
    Facts f = query_facts(q, 8);
    CHECK(f.trivial == true);
    CHECK(f.splits == true);
    CHECK(!f.simplicial);
  }

  TEST_CASE("scan reports the last feasible n") {
    FeasibilityQuery base;
    base.max_mult = 4;
    base.require_simplicial = base.require_splits = base.require_four_t2_le_f2 = true;
    ScanResult r = scan_bound(base, 6, 24);
    CHECK(r.rows.size() == 19);
    CHECK(r.last_feasible == 16);
    REQUIRE(r.first_feasible);
    CHECK(*r.first_feasible >= 6);
    FeasibilityQuery small;
    small.max_mult = 5;
    ScanResult clamped = scan_bound(small, 3, 6);
    CHECK(clamped.rows.size() == 4);
  }

  TEST_CASE("epsilon bound") {
    CHECK(epsilon_admissible(Rational(145557, 1000)));
    CHECK(!epsilon_admissible(Rational(145558, 1000)));
    CHECK(!epsilon_admissible(Rational(0)));
    CHECK(!epsilon_admissible(Rational(-1)));
    EpsilonBound b = epsilon_bound(Rational(8), 6);
    CHECK(b.radicand == Rational(254016 - 11 * 64 - 144 * 8));
    CHECK(b.offset == Rational(5 * 8 + 1008));
    CHECK(b.floor_bound == 256);
    CHECK(b.window_from == 257);
    CHECK(b.window_to == 262);
    CHECK(b.window_feasible == 0);
    CHECK_THROWS_AS(epsilon_bound(Rational(200)), RejectedInput);
    CHECK_THROWS_AS(epsilon_bound(Rational(0)), RejectedInput);
    // the bound decreases as epsilon grows
    CHECK(epsilon_bound(Rational(16)).floor_bound < b.floor_bound);
  }

  TEST_CASE("ratio report") {
    CHECK(conjecture_ratio_check({}).entries.empty());
    TVector low(100, {4935, 0, 0, 0, 1});
    RatioReport r = conjecture_ratio_check({low});
    REQUIRE(r.entries.size() == 1);
    CHECK(r.violations == 1);
    CHECK(!r.entries.front().within);
    CHECK(r.entries.front().ratio == Rational(1, 10000));
    CHECK(r.entries.front().lower == Rational(10000 - 4600 + 225, 480000));
    FeasibilityQuery q;
    q.n = 30;
    q.max_mult = 6;
    q.require_simplicial = q.require_splits = q.require_four_t2_le_f2 = true;
    RatioReport feasible = conjecture_ratio_check(enumerate(q).vectors);
    CHECK(feasible.violations == 0);
  }
}
