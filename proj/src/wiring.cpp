#include "pla/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pla/rational.hpp"

namespace pla {

namespace {

std::string block_text(const Move& m) { return std::to_string(m.first) + ".." + std::to_string(m.last); }

void require_valid(const WiringDiagram& w) {
  auto report = validate_wiring(w);
  if (report.ok()) return;
  if (report.has(IssueKind::Pencil)) throw PencilError("wiring diagram: " + report.issues.front().message);
  throw RejectedInput("invalid wiring diagram: " + report.issues.front().message);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ValidationReport validate_wiring(const WiringDiagram& w) {
  ValidationReport report;
  auto add = [&report](IssueKind kind, std::string message) { report.issues.push_back({kind, std::move(message)}); };

  if (w.n < 3) {
    add(IssueKind::TooFewLines, "a wiring diagram needs at least 3 wires, got " + std::to_string(w.n));
    return report;
  }
  if (w.n > kMaxLines) {
    add(IssueKind::TooFewLines, "wire count " + std::to_string(w.n) + " exceeds supported maximum");
    return report;
  }

  const auto n = static_cast<std::size_t>(w.n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> crossed(n * n, 0);
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    const Move& m = w.moves[i];
    const std::string where = "move " + std::to_string(i) + " (" + block_text(m) + ")";
    if (m.first < 0 || m.last >= w.n || m.first > m.last) {
      add(IssueKind::LineOutOfRange, where + " lies outside positions [0, " + std::to_string(w.n) + ")");
      return report;
    }
    if (m.size() < 2) {
      add(IssueKind::VertexTooSmall, where + " has fewer than 2 wires");
      continue;
    }
    if (m.size() == w.n) add(IssueKind::Pencil, where + " crosses all wires in one point (pencil)");
    for (int a = m.first; a <= m.last; ++a) {
      for (int b = a + 1; b <= m.last; ++b) {
        int lo = std::min(perm[a], perm[b]);
        int hi = std::max(perm[a], perm[b]);
        char& c = crossed[static_cast<std::size_t>(lo) * n + static_cast<std::size_t>(hi)];
        if (c) {
          add(IssueKind::RepeatedPair,
              where + " crosses wires {" + std::to_string(lo) + "," + std::to_string(hi) + "} a second time");
        }
        c = 1;
      }
    }
    std::reverse(perm.begin() + m.first, perm.begin() + m.last + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!crossed[i * n + j]) {
        add(IssueKind::UncoveredPair, "wires {" + std::to_string(i) + "," + std::to_string(j) + "} never cross");
      }
    }
  }
  return report;
}

Arrangement wiring_to_arrangement(const WiringDiagram& w) {
  require_valid(w);
  Arrangement arr;
  arr.n = w.n;
  std::vector<int> perm(static_cast<std::size_t>(w.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (const Move& m : w.moves) {
    std::vector<int> ids(perm.begin() + m.first, perm.begin() + m.last + 1);
    std::sort(ids.begin(), ids.end());
    arr.vertices.push_back(std::move(ids));
    std::reverse(perm.begin() + m.first, perm.begin() + m.last + 1);
  }
  return arr;
}

std::vector<Chamber> chambers(const WiringDiagram& w) {
  require_valid(w);
  const int n = w.n;
  struct Cell {
    std::set<int> lines;
    std::set<int> vertices;
  };
  std::vector<Cell> cells;
  // open[g + 1] is the cell currently in gap g; gap g lies below position g,
  // gap -1 is the top region.
  std::vector<int> open(static_cast<std::size_t>(n) + 1);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  auto touch_walls = [&](int gap) {
    Cell& c = cells[open[gap + 1]];
    if (gap >= 0) c.lines.insert(perm[gap]);
    if (gap + 1 < n) c.lines.insert(perm[gap + 1]);
  };
  auto open_cell = [&](int gap) {
    open[gap + 1] = static_cast<int>(cells.size());
    cells.emplace_back();
    touch_walls(gap);
  };

  for (int g = -1; g < n; ++g) open_cell(g);
  // Left-end cells of gaps 0..n-2, kept for the antipodal gluing.
  std::vector<int> left_cell(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int g = 0; g + 1 < n; ++g) left_cell[g] = open[g + 1];

  for (std::size_t vi = 0; vi < w.moves.size(); ++vi) {
    const Move& m = w.moves[vi];
    const int v = static_cast<int>(vi);
    for (int g = m.first - 1; g <= m.last; ++g) cells[open[g + 1]].vertices.insert(v);
    std::reverse(perm.begin() + m.first, perm.begin() + m.last + 1);
    for (int g = m.first; g < m.last; ++g) {
      open_cell(g);
      cells.back().vertices.insert(v);
    }
    touch_walls(m.first - 1);
    touch_walls(m.last);
  }

  // Circle at infinity: top, right gaps 0..n-2, bottom, left gaps n-2..0.
  // Right gap j sits opposite left gap n-2-j; top sits opposite bottom.
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  unite(open.front(), open.back());
  for (int j = 0; j + 1 < n; ++j) unite(open[j + 1], left_cell[n - 2 - j]);

  std::vector<int> slot(cells.size(), -1);
  std::vector<Chamber> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(Chamber{static_cast<int>(out.size()), {}, {}});
    }
    Chamber& ch = out[slot[r]];
    ch.lines.insert(ch.lines.end(), cells[i].lines.begin(), cells[i].lines.end());
    ch.vertices.insert(ch.vertices.end(), cells[i].vertices.begin(), cells[i].vertices.end());
  }
  for (auto& ch : out) {
    std::sort(ch.lines.begin(), ch.lines.end());
    ch.lines.erase(std::unique(ch.lines.begin(), ch.lines.end()), ch.lines.end());
    std::sort(ch.vertices.begin(), ch.vertices.end());
    ch.vertices.erase(std::unique(ch.vertices.begin(), ch.vertices.end()), ch.vertices.end());
  }
  return out;
}

std::vector<std::vector<int>> vertices_along_wires(const WiringDiagram& w) {
  require_valid(w);
  std::vector<std::vector<int>> along(static_cast<std::size_t>(w.n));
  std::vector<int> perm(static_cast<std::size_t>(w.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t vi = 0; vi < w.moves.size(); ++vi) {
    const Move& m = w.moves[vi];
    for (int p = m.first; p <= m.last; ++p) along[perm[p]].push_back(static_cast<int>(vi));
    std::reverse(perm.begin() + m.first, perm.begin() + m.last + 1);
  }
  return along;
}

}  // namespace pla
