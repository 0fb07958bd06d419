#pragma once

#include <vector>

#include "pla/arrangement.hpp"
#include "pla/rational.hpp"
#include "pla/wiring.hpp"

namespace pla {

// a*x + b*y + c = 0 in homogeneous form; (0,0,1) is the line at infinity.
// Scaled so that the first nonzero coefficient is 1, hence equality of
// normalized lines is projective equality.
class RationalLine {
 public:
  RationalLine(BigRational a, BigRational b, BigRational c);

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  const BigRational& c() const { return c_; }

  friend bool operator==(const RationalLine&, const RationalLine&) = default;

 private:
  BigRational a_, b_, c_;
};

// Exact incidence structure of the lines. Throws RejectedInput for fewer than
// 3 lines or repeated lines and PencilError when all lines are concurrent.
Arrangement lines_to_arrangement(const std::vector<RationalLine>& lines);

struct LineWiring {
  WiringDiagram wiring;
  std::vector<int> wire_to_line;  // wire k is input line wire_to_line[k]
};

// Sweeps the lines after a projective change of coordinates that moves a
// vertex-free line to infinity and makes no input line vertical.
LineWiring lines_to_wiring(const std::vector<RationalLine>& lines);

}  // namespace pla
