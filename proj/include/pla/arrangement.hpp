#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pla {

// Input that violates a documented precondition.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All lines pass through a single point.
class PencilError : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

// Counts that break the pair-counting identity sum C(i,2) t_i = C(n,2).
class InconsistentTVector : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

// Incidence form of an arrangement: n lines (ids 0..n-1) and the vertices,
// each the sorted set of lines through it. Only points on >= 2 lines are
// stored. The type can hold invalid data; validate_arrangement says why.
struct Arrangement {
  int n = 0;
  std::vector<std::vector<int>> vertices;

  // Sorted copy: ids within each vertex ascending, vertex list lexicographic.
  Arrangement canonical() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

enum class IssueKind {
  TooFewLines,
  LineOutOfRange,
  VertexTooSmall,
  RepeatedLineInVertex,
  UncoveredPair,
  RepeatedPair,
  Pencil,
};

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
};

ValidationReport validate_arrangement(const Arrangement& arr);

// Counts t_i of vertices of weight i, i >= 2, for an arrangement of n lines.
// Trailing zeros are trimmed, n is kept. Construction enforces the
// pair-counting identity and rejects the pencil vector t_n = 1.
class TVector {
 public:
  TVector() = default;
  // counts[0] is t_2, counts[1] is t_3, ...
  TVector(int n, std::vector<std::int64_t> counts);
  static TVector from_weights(int n, const std::map<int, std::int64_t>& by_weight);

  int n() const { return n_; }
  // t_i, zero outside the stored range.
  std::int64_t operator[](int weight) const {
    std::size_t idx = static_cast<std::size_t>(weight - 2);
    return weight >= 2 && idx < counts_.size() ? counts_[idx] : 0;
  }
  // m(A): the largest weight with a nonzero count.
  int multiplicity() const { return static_cast<int>(counts_.size()) + 1; }
  std::span<const std::int64_t> counts() const { return counts_; }

  // "(12,4,9)"
  std::string to_string() const;

  friend bool operator==(const TVector&, const TVector&) = default;
  friend auto operator<=>(const TVector&, const TVector&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> counts_;
};

struct FVector {
  std::int64_t f0 = 0;  // vertices
  std::int64_t f1 = 0;  // edges
  std::int64_t f2 = 0;  // chambers

  friend bool operator==(const FVector&, const FVector&) = default;
};

// Throws RejectedInput (or PencilError) when the arrangement is invalid.
TVector t_vector(const Arrangement& arr);
FVector f_vector(const TVector& t);

// Equality in Melchior's inequality: t2 = 3 + sum_{i>=4} (i-3) t_i.
bool is_simplicial(const TVector& t);
// t2 = n-1, t_{n-1} = 1 and nothing else.
bool is_near_pencil(const TVector& t);
// t_{n-1} > 0: a near pencil, or the generic triangle when n = 3.
bool is_trivial(const TVector& t);

}  // namespace pla
