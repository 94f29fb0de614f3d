#include "cyclocert/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "cyclocert/errors.hpp"

namespace cyclocert {

Factorization factorize(std::uint64_t n) {
  if (n == 0) {
    throw BadParameters("factorize needs n >= 1");
  }
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) {
      continue;
    }
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.push_back({p, a});
  }
  if (n > 1) {
    f.push_back({n, 1});
  }
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) {
      return false;
    }
  }
  return true;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, a] : factorize(n)) {
    if (a > 1) {
      return 0;
    }
    mu = -mu;
  }
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, a] : factorize(n)) {
    const std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        ds.push_back(ds[i] * pk);
      }
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, a] : factorize(n)) {
    phi = phi / p * (p - 1);
  }
  return phi;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) {
    r *= base;
  }
  return r;
}

IntPoly phi_poly(std::uint64_t n) {
  if (n == 0) {
    throw BadParameters("cyclotomic index must be >= 1");
  }
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (std::uint64_t d : divisors(n)) {
    switch (mobius(n / d)) {
      case 1:
        num *= xn_minus_1(d);
        break;
      case -1:
        den *= xn_minus_1(d);
        break;
      default:
        break;
    }
  }
  return div_exact(num, den);
}

IntPoly p_poly(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0 || n % d != 0) {
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  const std::uint64_t step = n / d;
  std::vector<Integer> c((d - 1) * step + 1);
  for (std::uint64_t k = 0; k < d; ++k) {
    c[k * step] = 1;
  }
  return IntPoly(std::move(c));
}

IntPoly q_poly(std::uint64_t n, std::uint64_t d) {
  if (d <= 1) {
    throw BadParameters("q_poly needs a divisor d > 1");
  }
  return div_exact(p_poly(n, d), phi_poly(n));
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::PowerReduction:
      return "Phi_{rp^m}(X) = Phi_{rp}(X^{p^(m-1)})";
    case Identity::PrimeSplit:
      return "Phi_{rp}(X) Phi_r(X) = Phi_r(X^p)";
    case Identity::PrimePowerPeel:
      return "Phi_n(X) Phi_{n/p^a}(X^{p^(a-1)}) = Phi_{n/p^a}(X^{p^a})";
    case Identity::CrossDivisibility:
      return "(X^{n/pq}-1) Phi_{n/p^a}(X^{p^(a-1)}) divides X^{n/p}-1";
  }
  return "unknown";
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw BadParameters(std::to_string(p) + " is not prime");
  }
}

void require_coprime(std::uint64_t r, std::uint64_t p) {
  if (r == 0 || r % p == 0) {
    throw BadParameters("r = " + std::to_string(r) + " must be positive and prime to p = " +
                        std::to_string(p));
  }
}

void require_prime_divisor(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0 || n % p != 0) {
    throw BadParameters(std::to_string(p) + " does not divide " + std::to_string(n));
  }
}

} // namespace

IdentityWitness check_power_reduction(std::uint64_t r, std::uint64_t p, unsigned m) {
  require_prime(p);
  require_coprime(r, p);
  if (m < 1) {
    throw BadParameters("m must be >= 1");
  }
  IdentityWitness w{Identity::PowerReduction, {}, {}, {}};
  w.params.r = r;
  w.params.p = p;
  w.params.m = m;
  w.params.n = r * ipow(p, m);
  w.lhs = phi_poly(w.params.n);
  w.rhs = compose_power(phi_poly(r * p), ipow(p, m - 1));
  return w;
}

IdentityWitness check_prime_split(std::uint64_t r, std::uint64_t p) {
  require_prime(p);
  require_coprime(r, p);
  IdentityWitness w{Identity::PrimeSplit, {}, {}, {}};
  w.params.r = r;
  w.params.p = p;
  w.params.n = r * p;
  const IntPoly phi_r = phi_poly(r);
  w.lhs = phi_poly(r * p) * phi_r;
  w.rhs = compose_power(phi_r, p);
  return w;
}

IdentityWitness check_prime_power_peel(std::uint64_t n, std::uint64_t p) {
  require_prime_divisor(n, p);
  const unsigned a = valuation(n, p);
  const std::uint64_t pa = ipow(p, a);
  const IntPoly base = phi_poly(n / pa);
  IdentityWitness w{Identity::PrimePowerPeel, {}, {}, {}};
  w.params.n = n;
  w.params.p = p;
  w.params.a = a;
  w.lhs = phi_poly(n) * compose_power(base, pa / p);
  w.rhs = compose_power(base, pa);
  return w;
}

IntPoly cross_divisor(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  require_prime_divisor(n, p);
  require_prime_divisor(n, q);
  if (p == q) {
    throw BadParameters("p and q must be distinct");
  }
  const unsigned a = valuation(n, p);
  const std::uint64_t pa = ipow(p, a);
  return xn_minus_1(n / (p * q)) * compose_power(phi_poly(n / pa), pa / p);
}

IntPoly cross_witness(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  return div_exact(xn_minus_1(n / p), cross_divisor(n, p, q));
}

IdentityWitness check_cross_divisibility(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  const IntPoly divisor = cross_divisor(n, p, q);
  IdentityWitness w{Identity::CrossDivisibility, {}, {}, {}};
  w.params.n = n;
  w.params.p = p;
  w.params.q = q;
  w.params.a = valuation(n, p);
  w.rhs = xn_minus_1(n / p);
  w.lhs = div_exact(w.rhs, divisor) * divisor;
  return w;
}

IntPoly phi_poly_recursive(std::uint64_t n) {
  if (n == 0) {
    throw BadParameters("cyclotomic index must be >= 1");
  }
  std::map<std::uint64_t, IntPoly> known;
  const auto ds = divisors(n);
  for (std::uint64_t d : ds) {
    IntPoly acc = xn_minus_1(d);
    for (const auto& [e, phi_e] : known) {
      if (d % e == 0) {
        acc = div_exact(acc, phi_e);
      }
    }
    known.emplace(d, std::move(acc));
  }
  return known.at(n);
}

} // namespace cyclocert
