#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pla/arrangement.hpp"

namespace pla {

// t^3 + c2 t^2 + c1 t + c0, coeffs = {c0, c1, c2, c3}.
struct CharPoly {
  int n = 0;
  std::int64_t f2 = 0;
  std::array<std::int64_t, 4> coeffs{};

  // m = (n+1)^2 - 4 f2
  std::int64_t discriminant() const;
  std::int64_t evaluate(std::int64_t t) const;
  // "t^3 - 13t^2 + 47t - 35"
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// (a + b*sqrt(radicand)) / den with den > 0. When the radicand is a perfect
// square the value is folded into a and b = 0.
struct QuadraticSurd {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t radicand = 0;
  std::int64_t den = 1;

  bool is_real() const { return b == 0 || radicand >= 0; }
  bool is_integer() const { return b == 0 && a % den == 0; }
  // Valid only when is_integer().
  std::int64_t integer_value() const { return a / den; }
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct RootAnalysis {
  std::int64_t m = 0;
  bool splits = false;
  bool integral = false;
  // The roots besides 1: (n-1 + sqrt m)/2 and (n-1 - sqrt m)/2.
  QuadraticSurd upper;
  QuadraticSurd lower;
  // "(t-1)(t-a)(t-b)" when integral, else "roots: 1, (n-1±√m)/2" with numbers.
  std::string text;
};

// Sum of mu(X) t^(3 - rank X) over the intersection lattice, with mu computed
// by the defining recursion over set inclusion.
CharPoly charpoly_from_lattice(const Arrangement& arr);
CharPoly charpoly_closed_form(int n, std::int64_t f2);
RootAnalysis root_analysis(const CharPoly& p);
bool splits_over_R(const TVector& t);

}  // namespace pla
