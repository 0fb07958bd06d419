#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pla/arrangement.hpp"
#include "pla/io.hpp"
#include "pla/lines.hpp"
#include "pla/wiring.hpp"

namespace pla::test {

inline std::string data_path(const std::string& name) { return std::string(PLA_DATA_DIR) + "/" + name; }

inline std::vector<RationalLine> load_lines(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  return read_lines(in, name);
}

inline WiringDiagram load_wiring(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  return read_wiring(in, name);
}

inline TVector load_tvector(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  return read_tvector(in, name);
}

inline Arrangement load_arrangement(const std::string& name) {
  std::istringstream in(read_file(data_path(name)));
  return read_arrangement(in, name);
}

// Random wiring diagram on n >= 3 wires. Starting from the identity, it keeps
// reversing a block of 2 to 4 adjacent wires that have pairwise not crossed
// yet, so every pair ends up crossing exactly once. Blocks never span all
// wires, hence the result is never a pencil.
inline WiringDiagram random_wiring(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<bool>> crossed(n, std::vector<bool>(n, false));
  WiringDiagram w{n, {}};
  auto fresh = [&](int first, int last) {
    for (int i = first; i <= last; ++i) {
      for (int j = i + 1; j <= last; ++j) {
        if (crossed[order[i]][order[j]]) return false;
      }
    }
    return true;
  };
  for (;;) {
    std::vector<Move> candidates;
    for (int first = 0; first + 1 < n; ++first) {
      for (int size = 2; size <= 4 && first + size <= n; ++size) {
        if (size == n) continue;
        if (fresh(first, first + size - 1)) candidates.push_back({first, first + size - 1});
      }
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    Move mv = candidates[pick(rng)];
    for (int i = mv.first; i <= mv.last; ++i) {
      for (int j = i + 1; j <= mv.last; ++j) {
        crossed[order[i]][order[j]] = crossed[order[j]][order[i]] = true;
      }
    }
    std::reverse(order.begin() + mv.first, order.begin() + mv.last + 1);
    w.moves.push_back(mv);
  }
  return w;
}

}  // namespace pla::test
