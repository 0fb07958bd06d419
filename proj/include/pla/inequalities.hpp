#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/rational.hpp"

namespace pla {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Applicability {
  All,
  SimplicialNontrivial,  // simplicial and not trivial (see is_trivial)
  SplitsOverR,
  SimplicialAndSplits,  // also excludes trivial arrangements
  ExternalAssumed,
  StretchableOnly,
};

enum class ConstraintKind { Equality, Inequality, Modular };

// slack = lhs - rhs. Eq: slack == 0, Ge: slack >= 0, Gt: slack > 0,
// NotCongruent: slack is a residue and must differ from the forbidden one.
enum class Direction { Eq, Ge, Gt, NotCongruent };

enum class Verdict { Pass, Fail, NotApplicable };

enum class Tri { No, Yes, Unknown };

std::string to_string(Applicability a);
std::string to_string(Direction d);
std::string to_string(Verdict v);

// What is known about the arrangement behind a t-vector. Unset fields are
// derived from the t-vector by derive_facts, except stretchable (false).
struct Facts {
  std::optional<bool> simplicial;
  std::optional<bool> splits;
  std::optional<bool> stretchable;
  // Some vertex on n-1 lines: a near pencil, or the 3-line triangle.
  std::optional<bool> trivial;
  bool include_external = false;
  // f-vector counted on a realization; checked against the t-vector identities.
  std::optional<FVector> observed;
};

Facts derive_facts(const TVector& t, Facts given = {});

struct PartCertificate {
  std::string label;
  Rational slack;
  Direction direction = Direction::Ge;
  Verdict verdict = Verdict::Pass;
};

struct Certificate {
  std::string name;
  Rational slack;
  Direction direction = Direction::Ge;
  Verdict verdict = Verdict::Pass;
  std::string reason;  // why not applicable
  std::vector<PartCertificate> parts;
};

struct ConstraintInfo {
  std::string name;
  std::string statement;
  Applicability applicability;
  ConstraintKind kind;
};

const std::vector<ConstraintInfo>& catalogue();
bool is_constraint(const std::string& name);

// Throws UnknownName, and RejectedInput when n != t.n().
Certificate check(const std::string& name, int n, const TVector& t, const Facts& facts);

const std::vector<std::string>& suite_names();
const std::vector<std::string>& suite_constraints(const std::string& suite);
// A suite asserts its own hypotheses (real-rooted: splits, simplicial:
// simplicial, external: include_external) unless the caller set them.
Facts suite_facts(const std::string& suite, Facts given);
std::vector<Certificate> run_suite(const std::string& suite, int n, const TVector& t, const Facts& facts);

// lhs - rhs = constant + sum_w coef[w] * t_w for 2 <= w <= m.
struct LinearForm {
  Rational constant;
  std::vector<Rational> coef;  // indexed by weight, size m + 1
};

struct LinearPart {
  std::string label;
  Direction direction = Direction::Ge;
  Tri applies = Tri::Yes;
  std::optional<LinearForm> form;  // empty for non-linear parts
};

// Applicability for vectors with n lines and multiplicity exactly m. Facts
// left unset are Unknown rather than derived.
Tri constraint_applies(const std::string& name, int n, int m, const Facts& facts);
std::vector<LinearPart> linear_parts(const std::string& name, int n, int m, const Facts& facts);

// n <= 95 + 2 sqrt(2056 + 63 sum_i Delta_i alpha_i), Delta_i = (i^2-3i-10)/2,
// for caps t_i <= alpha_i, i >= 6. Stated without derivation; reported only.
struct GrowthBound {
  Rational radicand;
  std::int64_t floor_bound = 0;
  std::string text;
};
GrowthBound growth_bound(const std::map<int, Rational>& alpha);

}  // namespace pla
