#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "pla/charpoly.hpp"
#include "pla/families.hpp"
#include "pla/lines.hpp"
#include "pla/wiring.hpp"
#include "support.hpp"

using namespace pla;

namespace {

// Whitney's formula: chi(t) = sum over subsets S of lines of
// (-1)^|S| t^(3 - rank S); a set of two or more lines has rank 2 when a single
// vertex carries all of them, and rank 3 otherwise.
std::array<std::int64_t, 4> whitney(const Arrangement& arr) {
  std::array<std::int64_t, 4> c{};
  const int n = arr.n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    int rank = std::min(size, 3);
    if (size >= 3) {
      for (const auto& v : arr.vertices) {
        std::uint32_t mask = 0;
        for (int id : v) mask |= 1u << id;
        if ((s & mask) == s) {
          rank = 2;
          break;
        }
      }
    }
    c[static_cast<std::size_t>(3 - rank)] += size % 2 ? -1 : 1;
  }
  return c;
}

std::vector<std::int64_t> integer_roots(const RootAnalysis& r) {
  REQUIRE(r.integral);
  std::vector<std::int64_t> roots{1, r.lower.integer_value(), r.upper.integer_value()};
  std::sort(roots.begin(), roots.end());
  return roots;
}

using Roots = std::vector<std::int64_t>;

}  // namespace

TEST_SUITE("charpoly") {
  TEST_CASE("lattice polynomial equals the subset sum") {
    std::mt19937_64 rng(99);
    for (int sample = 0; sample < 120; ++sample) {
      int n = 3 + static_cast<int>(rng() % 5);
      Arrangement arr = wiring_to_arrangement(test::random_wiring(n, rng));
      CHECK(charpoly_from_lattice(arr).coeffs == whitney(arr));
    }
    for (const char* name : {"a6_1.lines", "kelly_moser.lines", "near_pencil_5.lines"}) {
      Arrangement arr = lines_to_arrangement(test::load_lines(name));
      CHECK(charpoly_from_lattice(arr).coeffs == whitney(arr));
    }
  }

  TEST_CASE("triangle is (t-1)^3") {
    Arrangement tri{3, {{0, 1}, {0, 2}, {1, 2}}};
    CharPoly p = charpoly_from_lattice(tri);
    CHECK(p.coeffs == std::array<std::int64_t, 4>{-1, 3, -3, 1});
    CHECK(p.f2 == 4);
    CHECK(p.to_string() == "t^3 - 3t^2 + 3t - 1");
  }

  TEST_CASE("near pencils") {
    for (int n = 4; n <= 10; ++n) {
      auto g = generate(FamilyTag{Family::NearPencil, n});
      Arrangement arr = lines_to_arrangement(*g.lines);
      CharPoly p = charpoly_from_lattice(arr);
      CHECK(p == charpoly_closed_form(n, 2 * n - 2));
      RootAnalysis r = root_analysis(p);
      CHECK(r.m == (n - 3) * (n - 3));
      CHECK(integer_roots(r) == Roots{1, 1, n - 2});
    }
  }

  TEST_CASE("closed-form spectra") {
    CHECK(integer_roots(root_analysis(charpoly_closed_form(6, 12))) == Roots{1, 2, 3});
    CHECK(integer_roots(root_analysis(charpoly_closed_form(9, 24))) == Roots{1, 3, 5});
    CHECK(integer_roots(root_analysis(charpoly_closed_form(15, 60))) == Roots{1, 5, 9});
    CHECK(integer_roots(root_analysis(charpoly_closed_form(13, 48))) == Roots{1, 5, 7});
    RootAnalysis km = root_analysis(charpoly_closed_form(7, 16));
    CHECK(km.m == 0);
    CHECK(km.splits);
    CHECK(integer_roots(km) == Roots{1, 3, 3});
    CHECK(km.text == "(t-1)(t-3)(t-3)");
  }

  TEST_CASE("non-real roots") {
    RootAnalysis r = root_analysis(charpoly_closed_form(5, 10));
    CHECK(r.m == -4);
    CHECK(!r.splits);
    CHECK(!r.integral);
    CHECK(r.text == "roots: 1, (4±√-4)/2");
    RootAnalysis square = root_analysis(charpoly_closed_form(7, 15));
    CHECK(square.m == 4);
    CHECK(square.integral);
  }

  TEST_CASE("irrational roots print as surds") {
    RootAnalysis r = root_analysis(charpoly_closed_form(8, 19));
    CHECK(r.m == 5);
    CHECK(r.splits);
    CHECK(!r.integral);
    CHECK(r.text == "roots: 1, (7±√5)/2");
    CHECK(r.upper.to_string() == "(7+√5)/2");
    CHECK(r.lower.to_string() == "(7-√5)/2");
  }

  TEST_CASE("splits over R from t-vectors") {
    CHECK(splits_over_R(TVector(6, {3, 4})));
    CHECK(!splits_over_R(TVector(6, {15})));
    for (int n = 4; n <= 30; ++n) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(n - 2), 0);
      counts[0] = n - 1;
      counts.back() = 1;
      CHECK(splits_over_R(TVector(n, counts)));
    }
  }

  TEST_CASE("value at one, Vieta and the surd equation") {
    for (int n = 3; n <= 40; ++n) {
      for (std::int64_t f2 = 4; f2 <= 2 * binom2(n); ++f2) {
        CharPoly p = charpoly_closed_form(n, f2);
        CHECK(p.evaluate(1) == 0);
        RootAnalysis r = root_analysis(p);
        CHECK(r.splits == (4 * f2 <= (n + 1) * (n + 1)));
        if (r.integral) {
          std::int64_t a = r.lower.integer_value();
          std::int64_t b = r.upper.integer_value();
          CHECK(1 + a + b == n);
          CHECK(a + b + a * b == f2 - 1);
          CHECK(a * b == f2 - n);
          CHECK((2 * a - (n - 1)) * (2 * a - (n - 1)) == r.m);
          CHECK(p.evaluate(a) == 0);
          CHECK(p.evaluate(b) == 0);
        } else {
          // (n-1 ± sqrt m)/2: sum n-1 and product ((n-1)^2 - m)/4 = f2 - n
          CHECK(((n - 1) * (n - 1) - r.m) == 4 * (f2 - n));
        }
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(charpoly_closed_form(2, 4), RejectedInput);
    CHECK_THROWS_AS(charpoly_closed_form(5, 3), RejectedInput);
    CHECK_THROWS_AS(charpoly_from_lattice({3, {{0, 1, 2}}}), PencilError);
  }
}
