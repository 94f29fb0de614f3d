#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocert/intpoly.hpp"
#include "cyclocert/report.hpp"

namespace cyclocert {

/// Virtual character of Z/nZ: coeffs[k] is the multiplicity of chi^k, where
/// chi sends the generator to a fixed primitive n-th root of unity. Equivalently
/// a residue of Z[X] modulo X^n - 1 with exactly n slots.
class RingElem {
public:
  /// The zero element of order n (n >= 1).
  explicit RingElem(std::uint64_t n);
  /// Throws BadInput when coeffs.size() != n or n == 0.
  RingElem(std::uint64_t n, std::vector<Integer> coeffs);

  static RingElem one(std::uint64_t n);
  /// chi^k, exponent taken mod n.
  static RingElem character(std::uint64_t n, std::uint64_t k);
  /// Reduces a polynomial modulo X^n - 1.
  static RingElem from_poly(std::uint64_t n, const IntPoly& p);

  std::uint64_t order() const noexcept { return n_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Representative of degree < n.
  IntPoly to_poly() const { return IntPoly(coeffs_); }

  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const Integer& c);

  friend bool operator==(const RingElem&, const RingElem&) = default;

private:
  std::uint64_t n_;
  std::vector<Integer> coeffs_;
};

RingElem operator+(RingElem u, const RingElem& v);
RingElem operator-(RingElem u, const RingElem& v);

/// Tensor product: cyclic convolution of length n. Throws OrderMismatch.
RingElem ring_mul(const RingElem& u, const RingElem& v);

/// Restriction to the subgroup of index d (order n/d): exponents reduced mod
/// n/d. Throws NotADivisor or OrderMismatch when v does not have order n.
RingElem res(std::uint64_t n, std::uint64_t d, const RingElem& v);

/// chi_H^j -> chi_G^j for 0 <= j < n/d.
RingElem lift(std::uint64_t n, std::uint64_t d, const RingElem& w);

/// Induction from the subgroup of index d: lift(w) times P_{n,d}.
RingElem ind(std::uint64_t n, std::uint64_t d, const RingElem& w);

/// P_{n,d} read as an element of order n.
RingElem p_poly_elem(std::uint64_t n, std::uint64_t d);

/// Ind of the trivial character for every proper subgroup, ordered by
/// ascending index d > 1. Throws BadInput for n < 2.
std::vector<RingElem> induced_ideal_generators(std::uint64_t n);

/// Ring-level statement that the quotient by all induced ideals is
/// Z[X]/<Phi_n>, backed by theorem_check. Throws BadInput for n < 2.
CheckReport quotient_theorem_report(std::uint64_t n);

/// "n:c0,c1,...,c_{n-1}"
std::string to_string(const RingElem& e);

/// Accepts "n:c0,...". Throws ParseError.
RingElem parse_ring_elem(std::string_view text);

/// Accepts either "n:c0,..." or a bare list of exactly n coefficients.
RingElem parse_ring_elem(std::uint64_t n, std::string_view text);

} // namespace cyclocert
