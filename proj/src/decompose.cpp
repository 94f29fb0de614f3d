#include "cyclocert/decompose.hpp"

#include <string>

#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/errors.hpp"

namespace cyclocert {

namespace {

std::string mismatch_detail(const IntPoly& got, const IntPoly& want) {
  const auto bad = first_mismatch(got, want);
  return bad ? "first mismatch at coefficient " + std::to_string(*bad) : std::string{};
}

// Cofactors aligned with the ascending primes of fact.
std::vector<IntPoly> build_cofactors(std::uint64_t n, const Factorization& fact,
                                     DecomposeTrace* trace) {
  if (fact.size() == 1) {
    // n = p^a: P_{n,p} is already Phi_n.
    return {IntPoly::constant(1)};
  }

  const auto [pk, ak] = fact.back();
  const std::uint64_t pk_ak = ipow(pk, ak);
  const std::uint64_t m = n / pk_ak;
  const Factorization inner_fact(fact.begin(), fact.end() - 1);
  const std::vector<IntPoly> inner = build_cofactors(m, inner_fact, trace);

  DecomposeLevel level;
  level.n = n;
  level.peeled_prime = pk;
  level.peeled_exponent = ak;
  level.m = m;

  std::vector<IntPoly> h(fact.size());
  IntPoly& h_last = h.back();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const std::uint64_t pi = fact[i].prime;
    IntPoly F = compose_power(inner[i], pk_ak);
    IntPoly W = cross_witness(n, pk, pi);
    IntPoly g = W * F;
    BezoutCertificate bz = bezout_xn(n / pi, n / pk);

    h[i] = bz.B * g;
    h_last += bz.A * g;

    if (trace != nullptr) {
      level.substituted.push_back(std::move(F));
      level.witness_quotients.push_back(std::move(W));
      level.g.push_back(std::move(g));
      level.bezout.push_back(std::move(bz));
    }
  }
  if (trace != nullptr) {
    trace->levels.push_back(std::move(level));
  }
  return h;
}

// P_{n,p} straight from its defining sum of monomials.
IntPoly generator_from_definition(std::uint64_t n, std::uint64_t p) {
  std::vector<Integer> c(n - n / p + 1);
  for (std::uint64_t k = 0; k < p; ++k) {
    c[k * (n / p)] = 1;
  }
  return IntPoly(std::move(c));
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (const auto& pp : factorize(n)) {
    ps.push_back(pp.prime);
  }
  return ps;
}

} // namespace

DecomposeResult decompose(std::uint64_t n, const DecomposeOptions& options) {
  if (n < 2) {
    throw BadInput("decompose needs n >= 2, got " + std::to_string(n));
  }
  const Factorization fact = factorize(n);
  DecomposeResult result;
  if (options.keep_trace) {
    result.trace.emplace();
  }
  DecomposeCertificate& cert = result.certificate;
  cert.n = n;
  cert.primes = distinct_primes(n);
  cert.cofactors = build_cofactors(n, fact, result.trace ? &*result.trace : nullptr);
  cert.phi = phi_poly(n);
  return result;
}

DecomposeCertificate decompose(std::uint64_t n) {
  return decompose(n, DecomposeOptions{}).certificate;
}

CheckReport verify_certificate(const DecomposeCertificate& c) {
  if (c.n < 2) {
    throw MalformedCertificate("certificate n must be >= 2");
  }
  if (c.primes != distinct_primes(c.n)) {
    throw MalformedCertificate("primes are not the distinct prime divisors of " +
                               std::to_string(c.n));
  }
  if (c.cofactors.size() != c.primes.size()) {
    throw MalformedCertificate("expected " + std::to_string(c.primes.size()) +
                               " cofactors, found " + std::to_string(c.cofactors.size()));
  }

  CheckReport report("certificate n=" + std::to_string(c.n));
  const IntPoly phi = phi_poly_recursive(c.n);
  report.add("phi field equals Phi_n", c.phi == phi, mismatch_detail(c.phi, phi));

  IntPoly sum;
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    sum += generator_from_definition(c.n, c.primes[i]) * c.cofactors[i];
  }
  report.add("sum P_{n,p_i} h_i = Phi_n", sum == phi, mismatch_detail(sum, phi));
  return report;
}

CheckReport verify_trace(const DecomposeTrace& trace) {
  CheckReport report("decompose trace");
  for (const auto& level : trace.levels) {
    const std::string tag = "n=" + std::to_string(level.n) + " ";
    const std::uint64_t pk = level.peeled_prime;
    const std::uint64_t pk_ak = ipow(pk, level.peeled_exponent);
    const IntPoly phi_m = phi_poly(level.m);
    const IntPoly phi_m_low = compose_power(phi_m, pk_ak / pk);
    const IntPoly phi_m_high = compose_power(phi_m, pk_ak);
    const IntPoly big = xn_minus_1(level.n / pk);
    const auto primes = distinct_primes(level.m);

    if (primes.size() != level.g.size() || primes.size() != level.substituted.size()) {
      report.add(tag + "level shape", false, "trace lists do not match primes of m");
      continue;
    }
    IntPoly lhs;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t pi = primes[i];
      const IntPoly& F = level.substituted[i];
      const IntPoly left = level.g[i] * xn_minus_1(level.n / (pi * pk)) * phi_m_low;
      const IntPoly right = big * F;
      report.add(tag + "g_" + std::to_string(pi) + " defining equation", left == right,
                 mismatch_detail(left, right));
      lhs += generator_from_definition(level.n, pi) * F;
    }
    report.add(tag + "substituted sum = Phi_m(X^{p^a})", lhs == phi_m_high,
               mismatch_detail(lhs, phi_m_high));
  }
  return report;
}

CheckReport theorem_check(std::uint64_t n) {
  if (n < 2) {
    throw BadInput("theorem_check needs n >= 2, got " + std::to_string(n));
  }
  CheckReport report("theorem n=" + std::to_string(n));
  const IntPoly phi = phi_poly(n);

  bool forward = true;
  std::string forward_detail;
  for (std::uint64_t d : divisors(n)) {
    if (d == 1) {
      continue;
    }
    try {
      const IntPoly q = q_poly(n, d);
      if (q * phi != p_poly(n, d)) {
        forward = false;
        forward_detail = "Q_d * Phi_n != P_{n,d} for d=" + std::to_string(d);
        break;
      }
    } catch (const NotDivisible& e) {
      forward = false;
      forward_detail = "Phi_n does not divide P_{n," + std::to_string(d) + "}: " + e.what();
      break;
    }
  }
  report.add("forward: Phi_n divides every P_{n,d}, d>1", forward, forward_detail);

  const CheckReport cert = verify_certificate(decompose(n));
  report.merge(cert, "reverse: ");

  bool divides = true;
  std::string divides_detail;
  try {
    const IntPoly cof = div_exact(xn_minus_1(n), phi);
    divides = cof * phi == xn_minus_1(n);
  } catch (const NotDivisible& e) {
    divides = false;
    divides_detail = e.what();
  }
  report.add("Phi_n divides X^n - 1", divides, divides_detail);
  return report;
}

} // namespace cyclocert
