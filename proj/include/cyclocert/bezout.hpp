#pragma once

#include <cstdint>
#include <vector>

#include "cyclocert/intpoly.hpp"
#include "cyclocert/report.hpp"

namespace cyclocert {

/// One Euclid step r_{i-1} = q_i r_i + r_{i+1} lifted to
/// (X^{r_{i-1}} - 1) - f_i (X^{r_i} - 1) = X^{r_{i+1}} - 1,
/// with f_i = (X^{q_i r_i} - 1) / (X^{r_i} - 1) * X^{r_{i+1}}.
struct BezoutStep {
  std::uint64_t r_prev;
  std::uint64_t r_cur;
  std::uint64_t quotient;
  std::uint64_t r_next;
  IntPoly f;
};

struct BezoutTrace {
  /// Set when the inputs arrived with a < b and were exchanged before the chain.
  bool swapped = false;
  /// r_0 >= r_1 > ... > r_l = d.
  std::vector<std::uint64_t> remainders;
  std::vector<BezoutStep> steps;
};

/// (X^a - 1) A + (X^b - 1) B = X^d - 1 with d = gcd(a, b).
struct BezoutCertificate {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t d = 0;
  IntPoly A;
  IntPoly B;
  BezoutTrace trace;
};

/// Runs the exponent Euclid chain on (a, b) and back-substitutes every step
/// into a single pair (A, B). When b divides a the chain has one step and the
/// result is A = 0, B = 1. Throws BadParameters for a or b equal to 0.
BezoutCertificate bezout_xn(std::uint64_t a, std::uint64_t b);

/// Recomputes the identity and checks d against the integer gcd.
CheckReport verify_bezout(const BezoutCertificate& c);

} // namespace cyclocert
