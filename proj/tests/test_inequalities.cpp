#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pla/charpoly.hpp"
#include "pla/inequalities.hpp"
#include "pla/wiring.hpp"
#include "support.hpp"

using namespace pla;

namespace {

const TVector kA132(13, {12, 4, 9});
const TVector kA61(6, {3, 4});
const TVector kA91(9, {6, 4, 3});
const TVector kA151(15, {15, 10, 0, 6});
const TVector kKellyMoser(7, {3, 6});
const TVector kNearPencil5(5, {4, 0, 1});
const TVector kGeneric6(6, {15});

Certificate run(const std::string& name, const TVector& t, Facts facts = {}) {
  return check(name, t.n(), t, facts);
}

bool none_fail(const std::vector<Certificate>& certs) {
  return std::none_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.verdict == Verdict::Fail; });
}

const Certificate& find_cert(const std::vector<Certificate>& certs, const std::string& name) {
  auto it = std::find_if(certs.begin(), certs.end(), [&](const Certificate& c) { return c.name == name; });
  REQUIRE(it != certs.end());
  return *it;
}

}  // namespace

TEST_SUITE("inequalities") {
  TEST_CASE("tight cases of the grid arrangement") {
    Certificate mel = run("melchior", kA132);
    CHECK(mel.verdict == Verdict::Pass);
    CHECK(mel.slack == 0);
    Certificate seventh = run("t2-upper-seventh", kA132);
    CHECK(seventh.verdict == Verdict::Pass);
    CHECK(seventh.slack == 0);
    CHECK(run("four-t2-le-f2", kA132).slack == 0);
    CHECK(run("simplicial-melchior", kA132).slack == 0);
  }

  TEST_CASE("slacks are exact rationals") {
    Certificate c = run("t2-upper-seventh", kKellyMoser);
    CHECK(c.slack == Rational(6, 7));
    CHECK(to_string(c.slack) == "6/7");
  }

  TEST_CASE("Kelly-Moser meets the double point bound") {
    Certificate dm = run("dm-lower-bound", kKellyMoser);
    CHECK(dm.verdict == Verdict::Pass);
    CHECK(dm.slack == 0);
    auto certs = run_suite("real-rooted", 7, kKellyMoser, {});
    CHECK(none_fail(certs));
    CHECK(find_cert(certs, "dm-lower-bound").slack == 0);
  }

  TEST_CASE("suites") {
    CHECK(none_fail(run_suite("simplicial", 6, kA61, {})));
    auto generic = run_suite("real-rooted", 6, kGeneric6, {});
    CHECK(find_cert(generic, "f2-le-quarter").verdict == Verdict::Fail);
    CHECK(find_cert(generic, "f2-le-quarter").slack < 0);

    auto universal = run_suite("universal", 5, kNearPencil5, {});
    CHECK(universal.size() == 5);
    CHECK(std::all_of(universal.begin(), universal.end(), [](const Certificate& c) {
      return c.verdict == Verdict::Pass;
    }));
    CHECK(find_cert(run_suite("simplicial", 5, kNearPencil5, {}), "simplicial-melchior").verdict ==
          Verdict::NotApplicable);
    CHECK_THROWS_AS(run_suite("nope", 6, kA61, {}), UnknownName);
  }

  TEST_CASE("every catalogue entry belongs to some suite") {
    std::set<std::string> in_suites;
    for (const auto& s : suite_names()) {
      for (const auto& c : suite_constraints(s)) in_suites.insert(c);
    }
    for (const auto& info : catalogue()) {
      CAPTURE(info.name);
      CHECK(in_suites.count(info.name) == 1);
      CHECK(is_constraint(info.name));
    }
    CHECK(catalogue().size() == 28);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(run("no-such-constraint", kA61), UnknownName);
    CHECK_THROWS_AS(check("melchior", 7, kA61, {}), RejectedInput);
  }

  TEST_CASE("applicability gating") {
    CHECK(run("four-t2-le-f2", kNearPencil5).verdict == Verdict::NotApplicable);
    CHECK(run("four-t2-le-f2", TVector(3, {3})).verdict == Verdict::NotApplicable);
    CHECK(run("four-t2-le-f2", kGeneric6).verdict == Verdict::NotApplicable);
    CHECK(run("f2-le-quarter", kGeneric6).verdict == Verdict::NotApplicable);
    Facts asserted;
    asserted.splits = true;
    CHECK(run("f2-le-quarter", kGeneric6, asserted).verdict == Verdict::Fail);
    CHECK(run("ext-shnu", kA61).verdict == Verdict::NotApplicable);
    Facts external;
    external.include_external = true;
    CHECK(run("ext-shnu", kA61, external).verdict == Verdict::Pass);
    CHECK(run("maxquad-b", kA61).verdict == Verdict::NotApplicable);
    Facts stretch;
    stretch.stretchable = true;
    CHECK(run("maxquad-b", kA61, stretch).verdict != Verdict::NotApplicable);
    // multiplicity 2 leaves the quadratic lower bound undefined
    asserted.splits = true;
    CHECK(run("t2-quad-lower", kGeneric6, asserted).verdict == Verdict::NotApplicable);
    CHECK(run("t2t3-equality-mult6", TVector(14, {7, 21, 0, 0, 0, 1})).verdict == Verdict::NotApplicable);
  }

  TEST_CASE("strict inequalities need positive slack") {
    Certificate c = run("minmax", kA61);
    for (const auto& p : c.parts) {
      if (p.direction == Direction::Gt) CHECK((p.verdict == Verdict::Pass) == (p.slack > 0));
    }
  }

  TEST_CASE("equality in Melchior is simpliciality") {
    for (const auto& t : {kA132, kA61, kA91, kA151, kKellyMoser, kNearPencil5, kGeneric6, TVector(8, {4, 6, 1}),
                          TVector(7, {9, 2, 1})}) {
      CAPTURE(t.to_string());
      CHECK((run("melchior", t).slack == 0) == is_simplicial(t));
    }
  }

  TEST_CASE("two equality cases coincide") {
    for (const auto& t : {kA132, kA61, kA91, kA151, kKellyMoser, TVector(8, {4, 6, 1}), TVector(10, {5, 10, 0, 1})}) {
      CAPTURE(t.to_string());
      REQUIRE(is_simplicial(t));
      bool a = run("simplicial-melchior", t).slack == 0;
      bool b = run("four-t2-le-f2", t).slack == 0;
      CHECK(a == b);
    }
    CHECK(run("simplicial-melchior", kA91).slack == 0);
    CHECK(run("simplicial-melchior", kKellyMoser).slack == 2);
  }

  TEST_CASE("mod 3 obstruction") {
    // simplicial t-vectors with multiplicity <= 6 pass; a forged residue fails
    Certificate ok = run("t2t3-equality-mult6", kA132);
    CHECK(ok.verdict == Verdict::Pass);
    Facts forged;
    forged.simplicial = true;
    forged.trivial = false;
    // consistent with the pair count on 8 lines but with t4 = 2
    Certificate bad = run("t2t3-equality-mult6", TVector(8, {4, 4, 2}), forged);
    CHECK(bad.verdict == Verdict::Fail);
  }

  TEST_CASE("rel identities compare an observed f-vector") {
    Facts observed;
    observed.observed = f_vector(kA61);
    CHECK(run("rel-2", kA61, observed).verdict == Verdict::Pass);
    observed.observed->f2 += 1;
    CHECK(run("rel-2", kA61, observed).verdict == Verdict::Fail);
  }

  TEST_CASE("universal constraints on random arrangements") {
    std::mt19937_64 rng(5);
    for (int sample = 0; sample < 150; ++sample) {
      int n = 3 + static_cast<int>(rng() % 7);
      WiringDiagram w = test::random_wiring(n, rng);
      TVector t = t_vector(wiring_to_arrangement(w));
      Facts f;
      f.observed = FVector{};
      f.observed->f0 = static_cast<std::int64_t>(w.moves.size());
      f.observed->f2 = static_cast<std::int64_t>(chambers(w).size());
      std::int64_t incidences = 0;
      for (const auto& mv : w.moves) incidences += mv.size();
      f.observed->f1 = incidences;
      CHECK(none_fail(run_suite("universal", n, t, f)));
    }
  }

  TEST_CASE("growth bound formula") {
    GrowthBound none = growth_bound({});
    CHECK(none.radicand == 2056);
    CHECK(none.floor_bound == 185);
    GrowthBound one = growth_bound({{6, Rational(1)}});
    CHECK(one.radicand == 2056 + 63 * 4);
    CHECK(one.floor_bound == 191);
  }
}
