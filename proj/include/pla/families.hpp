#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/lines.hpp"
#include "pla/rational.hpp"
#include "pla/wiring.hpp"

namespace pla {

enum class Family { NearPencil, R1, R2, Coxeter, A132, KellyMoser, Unrecognized };

enum class CoxeterType { A61, A91, A151 };

struct FamilyTag {
  Family family = Family::Unrecognized;
  // NearPencil: n, R1: m (n = 2m), R2: k (n = 4k+1). Unused otherwise.
  int parameter = 0;
  CoxeterType coxeter = CoxeterType::A61;

  // "NearPencil(5)", "R1(4)", "R2(2)", "Coxeter(A91)", "A132", "KellyMoser"
  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Parses the to_string form, or the lowercase CLI names "near-pencil", "r1",
// "r2", "a61", "a91", "a151", "a132", "kelly-moser" (parameter supplied apart).
std::optional<FamilyTag> parse_family(const std::string& text, int parameter);

std::vector<FamilyTag> detect_family(int n, const TVector& t);

struct Generated {
  FamilyTag tag;
  TVector t;
  std::optional<std::vector<RationalLine>> lines;
};

// Throws RejectedInput when the parameter is out of the family's range.
Generated generate(const FamilyTag& tag);

struct GraphEdge {
  int a = 0;
  int b = 0;
  int weight = 0;
};

// Nodes are the lines bounding a chamber; two of them are joined when they
// meet at a corner of the chamber of weight >= 3.
struct ChamberGraph {
  std::vector<int> nodes;
  std::vector<GraphEdge> edges;

  bool connected() const;
  // Equal for isomorphic graphs. Exact up to 8 nodes; beyond that a
  // degree/weight invariant that may merge non-isomorphic graphs.
  std::string canonical_form() const;
};

// Throws RejectedInput when the chamber is not one of chambers(w).
ChamberGraph chamber_graph(const WiringDiagram& w, const Chamber& chamber);

struct CoxeterResult {
  bool uniform = false;
  std::optional<int> x;
  std::optional<FamilyTag> identified;
  std::string detail;
};

// Uniform when every chamber graph is connected and all are isomorphic. A
// uniform graph must be the 3-node path with edge weights 3 and x.
CoxeterResult coxeter_test(const WiringDiagram& w);

struct CoxSolution {
  int x = 0;
  bool feasible = false;
  std::string reason;
  // Exact solution of the linear system, present unless it is singular.
  std::optional<Rational> t2, t3, tx, pairs;
  std::optional<int> n;
  std::optional<TVector> t;
};

// Solves, for fixed x >= 4, the linear system in (t2, t3, tx, N = C(n,2)):
//   t2 - (x-3) tx = 3,  t2 + 3 t3 + C(x,2) tx = N,  2 t2 = 3 t3,  3 t3 = x tx.
CoxSolution solve_cox_system(int x);

struct ChamberAudit {
  bool applicable = false;
  std::string reason;
  std::vector<int> doubles_per_chamber;
  int max_doubles = 0;
  bool every_chamber_has_one = false;
};

// Counts double points in the closure of every chamber.
ChamberAudit double_point_chamber_audit(const WiringDiagram& w);

// Some weight-2 vertex whose neighbours along both of its lines all have
// weight 3.
bool double_point_with_triple_neighbours(const WiringDiagram& w);

}  // namespace pla
