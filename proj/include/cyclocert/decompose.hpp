#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclocert/bezout.hpp"
#include "cyclocert/intpoly.hpp"
#include "cyclocert/report.hpp"

namespace cyclocert {

/// Cofactors h_i with sum_i P_{n,p_i}(X) h_i(X) = Phi_n(X), where p_i runs over
/// the distinct primes of n and P_{n,p} = (X^n - 1) / (X^{n/p} - 1).
struct DecomposeCertificate {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> primes;
  std::vector<IntPoly> cofactors;
  IntPoly phi;
};

/// Record of one recursion level that peels the largest prime p_k.
struct DecomposeLevel {
  std::uint64_t n = 0;
  std::uint64_t peeled_prime = 0;
  unsigned peeled_exponent = 0;
  /// n / p_k^{a_k}
  std::uint64_t m = 0;
  /// F_i(X) = f_i(X^{p_k^{a_k}}) for the cofactors f_i of m.
  std::vector<IntPoly> substituted;
  /// (X^{n/p_k} - 1) / ((X^{n/(p_i p_k)} - 1) Phi_m(X^{p_k^{a_k - 1}})).
  std::vector<IntPoly> witness_quotients;
  /// g_i = witness_i * F_i
  std::vector<IntPoly> g;
  /// Pairs for exponents (n/p_i, n/p_k).
  std::vector<BezoutCertificate> bezout;
};

struct DecomposeTrace {
  /// Innermost level first.
  std::vector<DecomposeLevel> levels;
};

struct DecomposeOptions {
  bool keep_trace = false;
};

struct DecomposeResult {
  DecomposeCertificate certificate;
  std::optional<DecomposeTrace> trace;
};

/// Builds the certificate by induction on the number of distinct primes,
/// peeling the largest prime at each level. Throws BadInput for n < 2.
DecomposeResult decompose(std::uint64_t n, const DecomposeOptions& options);
DecomposeCertificate decompose(std::uint64_t n);

/// Checks a certificate using only P_{n,p} built from its defining sum, an
/// independent recursive computation of Phi_n, multiplication and addition.
/// Throws MalformedCertificate when the primes are not those of n or the
/// cofactor list does not line up with them.
CheckReport verify_certificate(const DecomposeCertificate& c);

/// Checks the trace invariants: each g_i satisfies its defining equation and
/// each level's substituted sum equals Phi_m(X^{p_k^{a_k}}).
CheckReport verify_trace(const DecomposeTrace& trace);

/// Both inclusions of <P_{n,d} : d > 1, d | n> = <Phi_n> plus Phi_n | X^n - 1.
CheckReport theorem_check(std::uint64_t n);

} // namespace cyclocert
