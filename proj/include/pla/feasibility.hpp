#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/inequalities.hpp"
#include "pla/rational.hpp"

namespace pla {

// A linear condition on (t2, t3, ...) supplied by the caller rather than the
// catalogue, e.g. t2 <= c * t3.
struct CustomRow {
  std::string label;
  LinearForm form;  // coef may be shorter than the multiplicity; missing entries are 0
  Direction direction = Direction::Ge;
};

struct FeasibilityQuery {
  int n = 0;
  std::optional<int> max_mult;  // defaults to n - 1
  bool require_simplicial = false;
  bool require_splits = false;
  bool require_four_t2_le_f2 = false;
  bool include_external = false;
  std::vector<std::string> extra;  // catalogue constraint names
  std::optional<std::int64_t> fixed_t2;
  std::vector<CustomRow> custom;

  int effective_max_mult() const { return max_mult.value_or(n - 1); }
};

// Throws RejectedInput for n < 3, max_mult < 2 or max_mult > n - 1, and
// UnknownName for constraints outside the catalogue.
void validate_query(const FeasibilityQuery& q);

// Catalogue constraints imposed by the query, in a fixed order.
std::vector<std::string> active_constraints(const FeasibilityQuery& q);

// Trivial vectors (t_{n-1} > 0) are dropped when some active constraint is
// stated for simplicial arrangements that are not trivial.
bool excludes_trivial(const FeasibilityQuery& q);

// Facts asserted by the query; a vector of multiplicity m is trivial exactly
// when m = n - 1.
Facts query_facts(const FeasibilityQuery& q, int m);

struct EnumerateOptions {
  bool prune = true;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;   // partial assignments and t2 candidates visited
  std::uint64_t pruned = 0;  // values cut from the natural ranges by bounds
  std::uint64_t leaves = 0;  // complete vectors tested
  std::uint64_t feasible = 0;
};

struct FeasibleSet {
  FeasibilityQuery query;
  std::vector<TVector> vectors;  // ascending by (t_max, ..., t2)
  EnumerationStats stats;
};

// Receives t indexed by weight (t[0] and t[1] are 0) for multiplicity m.
using FeasibleVisitor = std::function<void(int m, std::span<const std::int64_t> t)>;

EnumerationStats for_each_feasible(const FeasibilityQuery& q, const FeasibleVisitor& visit,
                                   EnumerateOptions options = {});
FeasibleSet enumerate(const FeasibilityQuery& q, EnumerateOptions options = {});

struct ScanRow {
  int n = 0;
  EnumerationStats stats;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<int> first_feasible;
  std::optional<int> last_feasible;
};

// Runs the query for every n in [n_from, n_to]; max_mult is clamped to n - 1.
ScanResult scan_bound(const FeasibilityQuery& base, int n_from, int n_to, EnumerateOptions options = {});

// n <= (2 sqrt(D) + X) / eps with D = 254016 - 11 eps^2 - 144 eps and
// X = 5 eps + 1008, for 0 < eps <= (72/11)(6 sqrt(15) - 1).
struct EpsilonBound {
  Rational eps;
  Rational radicand;
  Rational offset;
  std::int64_t floor_bound = 0;
  std::string text;
  int window_from = 0;
  int window_to = -1;  // empty window when < window_from
  std::uint64_t window_feasible = 0;
};

bool epsilon_admissible(const Rational& eps);
// The query whose emptiness the bound asserts: multiplicity <= 6, simplicial,
// splitting, 4 t2 <= f2 and t2 <= 24/(16 + eps) t3.
FeasibilityQuery epsilon_query(int n, const Rational& eps);
// Throws RejectedInput when eps is not admissible. Enumerates n in
// (floor_bound, floor_bound + window].
EpsilonBound epsilon_bound(const Rational& eps, int window = 0);

struct RatioEntry {
  int n = 0;
  TVector t;
  Rational ratio;  // t6 / n^2
  Rational lower;
  Rational upper;
  bool within = false;
};

struct RatioReport {
  std::vector<RatioEntry> entries;
  std::size_t violations = 0;
};

// Compares t6/n^2 with [(n^2 - 46n + 225)/(48 n^2), (n^2 + 2n - 47)/(48 n^2)].
RatioReport conjecture_ratio_check(const std::vector<TVector>& vectors);

}  // namespace pla
