#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cyclocert {

using Integer = mpz_class;

/// Dense univariate polynomial over the integers, coefficients stored in
/// ascending degree. The coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector and two polynomials are equal iff their
/// vectors are equal.
class IntPoly {
public:
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr std::int64_t kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * X^k
  static IntPoly monomial(std::size_t k, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of X^i, zero past the degree.
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }

  /// Exponents carrying a nonzero coefficient, ascending.
  std::vector<std::size_t> support() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  /// Adds c * X^shift * rhs in place.
  void add_scaled_shifted(const IntPoly& rhs, const Integer& c, std::size_t shift);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly neg(const IntPoly& p);
IntPoly mul(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / q over the integers. Throws DivisionByZero when q is zero
/// and NotDivisible when some step of the long division leaves the integers or
/// the final remainder is nonzero.
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

/// Remainder of p modulo a monic q with degree(q) >= 1. Throws NotMonic
/// otherwise (a constant monic divisor is also rejected).
IntPoly rem_monic(const IntPoly& p, const IntPoly& q);

/// p(X^k) for k >= 1.
IntPoly compose_power(const IntPoly& p, std::size_t k);

/// X^m - 1 for m >= 1.
IntPoly xn_minus_1(std::size_t m);

/// Multiplies by X^k.
IntPoly shift(const IntPoly& p, std::size_t k);

/// Evaluates at an integer point.
Integer evaluate(const IntPoly& p, const Integer& x);

/// Index of the first coefficient where p and q differ, or nullopt if equal.
std::optional<std::size_t> first_mismatch(const IntPoly& p, const IntPoly& q);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return sub(p, q); }
inline IntPoly operator-(const IntPoly& p) { return neg(p); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }

/// Canonical text: comma-separated decimal coefficients in ascending degree,
/// "-1,0,1" for X^2 - 1, and the empty string for zero.
std::string to_string(const IntPoly& p);

/// Parses the canonical text form. Trailing zero coefficients are accepted and
/// dropped. Throws ParseError with the byte offset of the offending token.
IntPoly parse_poly(std::string_view text);

/// Human-oriented rendering such as "X^2 - X + 1".
std::string pretty(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

namespace detail {

/// Operands shorter than this (or sparse ones) use schoolbook multiplication.
inline constexpr std::size_t kKaratsubaThreshold = 48;

/// Multiplication with an explicit Karatsuba cutoff. A threshold of 0 forces
/// schoolbook; any positive value switches to divide-and-conquer once both
/// operands reach that length.
IntPoly mul_with_threshold(const IntPoly& p, const IntPoly& q, std::size_t threshold);

/// Comma-separated decimal integers, order and zeros preserved. Error
/// positions are reported relative to base_offset.
std::vector<Integer> parse_integer_list(std::string_view text, std::size_t base_offset);

} // namespace detail

} // namespace cyclocert
