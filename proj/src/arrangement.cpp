#include "pla/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "pla/rational.hpp"

namespace pla {

Arrangement Arrangement::canonical() const {
  Arrangement out{n, vertices};
  for (auto& v : out.vertices) std::sort(v.begin(), v.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(), [kind](const ValidationIssue& i) { return i.kind == kind; });
}

ValidationReport validate_arrangement(const Arrangement& arr) {
  ValidationReport report;
  auto add = [&report](IssueKind kind, std::string message) { report.issues.push_back({kind, std::move(message)}); };

  if (arr.n < 3) {
    add(IssueKind::TooFewLines, "an arrangement needs at least 3 lines, got " + std::to_string(arr.n));
    return report;
  }
  if (arr.n > kMaxLines) {
    add(IssueKind::TooFewLines, "line count " + std::to_string(arr.n) + " exceeds supported maximum");
    return report;
  }

  const auto n = static_cast<std::size_t>(arr.n);
  // cover[i*n + j] counts the vertices containing the pair i < j.
  std::vector<int> cover(n * n, 0);
  for (std::size_t vi = 0; vi < arr.vertices.size(); ++vi) {
    auto ids = arr.vertices[vi];
    std::sort(ids.begin(), ids.end());
    const std::string where = "vertex " + std::to_string(vi);
    if (ids.size() < 2) {
      add(IssueKind::VertexTooSmall, where + " lies on fewer than 2 lines");
    }
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      add(IssueKind::RepeatedLineInVertex, where + " lists a line twice");
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    bool in_range = true;
    for (int id : ids) {
      if (id < 0 || id >= arr.n) {
        add(IssueKind::LineOutOfRange, where + " references line " + std::to_string(id) + " outside [0, " +
                                           std::to_string(arr.n) + ")");
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (ids.size() == n) add(IssueKind::Pencil, where + " contains every line (pencil)");
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        ++cover[static_cast<std::size_t>(ids[a]) * n + static_cast<std::size_t>(ids[b])];
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int c = cover[i * n + j];
      std::string pair = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
      if (c == 0) add(IssueKind::UncoveredPair, "lines " + pair + " meet in no vertex");
      if (c > 1) add(IssueKind::RepeatedPair, "lines " + pair + " meet in " + std::to_string(c) + " vertices");
    }
  }
  return report;
}

TVector::TVector(int n, std::vector<std::int64_t> counts) : n_(n), counts_(std::move(counts)) {
  if (n_ < 3 || n_ > kMaxLines) {
    throw InconsistentTVector("line count " + std::to_string(n_) + " outside [3, " + std::to_string(kMaxLines) + "]");
  }
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  // counts_[k] is t_{k+2}, so the largest weight present is counts_.size() + 1
  if (counts_.size() + 1 >= static_cast<std::size_t>(n_)) {
    if (counts_.size() + 1 == static_cast<std::size_t>(n_)) {
      throw PencilError("t-vector has a vertex on all " + std::to_string(n_) + " lines");
    }
    throw InconsistentTVector("t-vector has weights above n = " + std::to_string(n_));
  }
  std::int64_t pairs = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 0) throw InconsistentTVector("negative count t_" + std::to_string(k + 2));
    pairs += binom2(static_cast<std::int64_t>(k) + 2) * counts_[k];
  }
  if (pairs != binom2(n_)) {
    throw InconsistentTVector("sum C(i,2) t_i = " + std::to_string(pairs) + " but C(" + std::to_string(n_) +
                              ",2) = " + std::to_string(binom2(n_)));
  }
}

TVector TVector::from_weights(int n, const std::map<int, std::int64_t>& by_weight) {
  std::vector<std::int64_t> counts;
  for (const auto& [w, count] : by_weight) {
    if (w < 2) throw InconsistentTVector("weight " + std::to_string(w) + " below 2");
    if (w > n) throw InconsistentTVector("weight " + std::to_string(w) + " above n = " + std::to_string(n));
    if (counts.size() < static_cast<std::size_t>(w - 1)) counts.resize(static_cast<std::size_t>(w - 1), 0);
    counts[static_cast<std::size_t>(w - 2)] = count;
  }
  return TVector(n, std::move(counts));
}

std::string TVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) os << ',';
    os << counts_[k];
  }
  os << ')';
  return os.str();
}

TVector t_vector(const Arrangement& arr) {
  auto report = validate_arrangement(arr);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    if (first.kind == IssueKind::Pencil || report.has(IssueKind::Pencil)) throw PencilError("pencil arrangement");
    throw RejectedInput("invalid arrangement: " + first.message);
  }
  std::map<int, std::int64_t> by_weight;
  for (const auto& v : arr.vertices) ++by_weight[static_cast<int>(v.size())];
  return TVector::from_weights(arr.n, by_weight);
}

FVector f_vector(const TVector& t) {
  FVector f;
  for (int w = 2; w <= t.multiplicity(); ++w) {
    f.f0 += t[w];
    f.f1 += w * t[w];
    f.f2 += (w - 1) * t[w];
  }
  f.f2 += 1;
  return f;
}

bool is_simplicial(const TVector& t) {
  std::int64_t rhs = 3;
  for (int w = 4; w <= t.multiplicity(); ++w) rhs += (w - 3) * t[w];
  return t[2] == rhs;
}

bool is_near_pencil(const TVector& t) {
  const int n = t.n();
  if (n < 4) return false;
  if (t.multiplicity() != n - 1 || t[n - 1] != 1 || t[2] != n - 1) return false;
  for (int w = 3; w < n - 1; ++w) {
    if (t[w] != 0) return false;
  }
  return true;
}

bool is_trivial(const TVector& t) { return t[t.n() - 1] > 0; }

}  // namespace pla
