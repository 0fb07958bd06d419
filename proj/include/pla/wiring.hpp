#pragma once

#include <vector>

#include "pla/arrangement.hpp"

namespace pla {

// Positions first..last (inclusive, 0 = top) cross in one point; the block of
// wires occupying them is reversed.
struct Move {
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
  friend bool operator==(const Move&, const Move&) = default;
};

// Wires start in order 0..n-1 from top to bottom at the left end.
struct WiringDiagram {
  int n = 0;
  std::vector<Move> moves;

  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

// Reports blocks out of range or smaller than 2, pairs crossed twice or never,
// and a block spanning all wires (pencil).
ValidationReport validate_wiring(const WiringDiagram& w);

// Vertex i is the set of wires in move i.
Arrangement wiring_to_arrangement(const WiringDiagram& w);

struct Chamber {
  int id = 0;
  std::vector<int> lines;     // sorted
  std::vector<int> vertices;  // sorted move indices
};

// Projective chambers: affine cells of the sweep with the unbounded ones glued
// to their antipodes.
std::vector<Chamber> chambers(const WiringDiagram& w);

// For each wire, the moves it takes part in, left to right. Read cyclically
// this is the order of vertices along the projective line.
std::vector<std::vector<int>> vertices_along_wires(const WiringDiagram& w);

}  // namespace pla
