#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclocert/intpoly.hpp"

namespace cyclocert {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly ascending primes; empty for 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_totient(std::uint64_t n);
/// Exponent of p in n (n >= 1).
unsigned valuation(std::uint64_t n, std::uint64_t p);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// n-th cyclotomic polynomial from the Moebius product over divisors:
/// binomials X^d - 1 with mu(n/d) = +1 go to a numerator, those with -1 to a
/// denominator, followed by a single exact division.
IntPoly phi_poly(std::uint64_t n);

/// Sum_{k=0}^{d-1} X^{k n / d}, the image of the induced trivial character
/// from the index-d subgroup. Throws NotADivisor if d does not divide n.
IntPoly p_poly(std::uint64_t n, std::uint64_t d);

/// Exact quotient p_poly(n, d) / phi_poly(n) for d > 1.
IntPoly q_poly(std::uint64_t n, std::uint64_t d);

enum class Identity { PowerReduction, PrimeSplit, PrimePowerPeel, CrossDivisibility };

std::string to_string(Identity id);

struct IdentityParams {
  std::uint64_t n = 0, p = 0, r = 0, m = 0, a = 0, q = 0;
};

/// Both sides of a cyclotomic identity, materialized. For CrossDivisibility the lhs is
/// quotient * divisor and rhs the dividend.
struct IdentityWitness {
  Identity identity;
  IdentityParams params;
  IntPoly lhs;
  IntPoly rhs;

  bool holds() const { return lhs == rhs; }
};

/// Phi_{r p^m}(X) = Phi_{r p}(X^{p^{m-1}}).
IdentityWitness check_power_reduction(std::uint64_t r, std::uint64_t p, unsigned m);

/// Phi_{r p}(X) * Phi_r(X) = Phi_r(X^p).
IdentityWitness check_prime_split(std::uint64_t r, std::uint64_t p);

/// Phi_n(X) * Phi_{n'}(X^{p^{a-1}}) = Phi_{n'}(X^{p^a}), n' = n / p^a, a = ord_p(n).
IdentityWitness check_prime_power_peel(std::uint64_t n, std::uint64_t p);

/// Exact quotient (X^{n/p} - 1) / ((X^{n/(pq)} - 1) * Phi_{n'}(X^{p^{a-1}}))
/// with n' = n / p^a. Throws BadParameters unless p and q are distinct primes
/// dividing n.
IntPoly cross_witness(std::uint64_t n, std::uint64_t p, std::uint64_t q);

/// The divisor (X^{n/(pq)} - 1) * Phi_{n'}(X^{p^{a-1}}) used by cross_witness.
IntPoly cross_divisor(std::uint64_t n, std::uint64_t p, std::uint64_t q);

IdentityWitness check_cross_divisibility(std::uint64_t n, std::uint64_t p, std::uint64_t q);

/// Phi_n by the recursive route (X^n - 1) / prod_{d | n, d < n} Phi_d.
/// Shares nothing with phi_poly beyond IntPoly arithmetic; verifiers use it.
IntPoly phi_poly_recursive(std::uint64_t n);

} // namespace cyclocert
