#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// Under C++20 comparison rewriting, boost::rational's mixed integer == picks
// its own reversed template and recurses forever. Exact non-template
// overloads win resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
}  // namespace boost

namespace pla {

// Exact rational used for t-vector arithmetic. Every quantity that reaches it
// is polynomial of degree <= 2 in n and linear in the counts, so 64-bit
// numerators stay far from overflow for the supported range (see kMaxLines).
using Rational = boost::rational<std::int64_t>;

// Unbounded rationals for projective geometry on user-supplied coordinates.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Upper limit on the line count accepted by t-vector level operations.
inline constexpr int kMaxLines = 100000;

std::string to_string(const Rational& value);
std::string to_string(const BigRational& value);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
BigRational parse_big_rational(std::string_view text);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
std::int64_t floor(const Rational& value);
std::int64_t ceil(const Rational& value);

constexpr std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

// Largest r with r*r <= v, for v >= 0.
std::int64_t isqrt(std::int64_t v);
bool is_perfect_square(std::int64_t v);

}  // namespace pla
