#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclocert/intpoly.hpp"
#include "cyclocert/report.hpp"
#include "cyclocert/repring.hpp"

namespace cyclocert {

/// Element of Z[zeta_n], held as its residue modulo Phi_n (degree < phi(n)).
/// zeta_n itself is the residue of X.
class CycInt {
public:
  /// Reduces rep modulo Phi_n; the modulus must be phi_poly(n).
  CycInt(std::uint64_t n, const IntPoly& rep, const IntPoly& modulus);

  std::uint64_t conductor() const noexcept { return n_; }
  const IntPoly& rep() const noexcept { return rep_; }

  /// Integer value when the residue is constant.
  bool is_integer() const { return rep_.degree() <= 0; }
  Integer to_integer() const { return rep_.coeff(0); }

  friend bool operator==(const CycInt&, const CycInt&) = default;

private:
  friend class CyclotomicField;
  CycInt(std::uint64_t n, IntPoly reduced) : n_(n), rep_(std::move(reduced)) {}

  std::uint64_t n_;
  IntPoly rep_;
};

/// Arithmetic context for Z[zeta_n]: Phi_n plus the reduced powers
/// zeta^0 .. zeta^{n-1}, so sums of roots of unity cost only additions.
class CyclotomicField {
public:
  explicit CyclotomicField(std::uint64_t n);

  std::uint64_t conductor() const noexcept { return n_; }
  const IntPoly& modulus() const noexcept { return phi_; }

  CycInt zero() const { return CycInt(n_, IntPoly{}); }
  CycInt from_integer(const Integer& c) const;
  /// zeta^e for any integer e.
  CycInt zeta_pow(std::int64_t e) const;

  CycInt add(const CycInt& a, const CycInt& b) const;
  CycInt mul(const CycInt& a, const CycInt& b) const;

  /// In-place a += c * zeta^e.
  void accumulate(CycInt& a, std::int64_t e, const Integer& c = 1) const;

private:
  std::uint64_t n_;
  IntPoly phi_;
  std::vector<IntPoly> powers_;
};

CycInt zeta_pow(std::uint64_t n, std::int64_t e);

/// sum_{k=0}^{d-1} zeta_n^{k (n/d) m}: the character of Ind(1_H) at sigma^m
/// for the subgroup of index d. Throws NotADivisor.
CycInt induced_char_value(std::uint64_t n, std::uint64_t d, std::int64_t m);
CycInt induced_char_value(const CyclotomicField& field, std::uint64_t d, std::int64_t m);

/// Character of a virtual representation at sigma^m.
CycInt character_value(const CyclotomicField& field, const RingElem& v, std::int64_t m);

/// For every d | n and every m in [0, n): the induced character value equals
/// d when sigma^m lies in the index-d subgroup (d | m) and 0 otherwise.
CheckReport verify_ind_char(std::uint64_t n);

/// Residue coefficients in canonical text, except that zero prints as "0".
std::string to_string(const CycInt& c);

} // namespace cyclocert
