#include "cyclocert/repring.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/decompose.hpp"
#include "cyclocert/errors.hpp"

namespace cyclocert {

namespace {

void require_same_order(const RingElem& u, const RingElem& v) {
  if (u.order() != v.order()) {
    throw OrderMismatch("orders " + std::to_string(u.order()) + " and " +
                        std::to_string(v.order()) + " differ");
  }
}

void require_divisor(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0 || n % d != 0) {
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  }
}

} // namespace

RingElem::RingElem(std::uint64_t n) : n_(n), coeffs_(n) {
  if (n == 0) {
    throw BadInput("group order must be >= 1");
  }
}

RingElem::RingElem(std::uint64_t n, std::vector<Integer> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n == 0) {
    throw BadInput("group order must be >= 1");
  }
  if (coeffs_.size() != n) {
    throw BadInput("expected " + std::to_string(n) + " multiplicities, got " +
                   std::to_string(coeffs_.size()));
  }
}

RingElem RingElem::one(std::uint64_t n) {
  return character(n, 0);
}

RingElem RingElem::character(std::uint64_t n, std::uint64_t k) {
  RingElem e(n);
  e.coeffs_[k % n] = 1;
  return e;
}

RingElem RingElem::from_poly(std::uint64_t n, const IntPoly& p) {
  RingElem e(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    e.coeffs_[i % n] += p.coeffs()[i];
  }
  return e;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < n_; ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < n_; ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

RingElem& RingElem::operator*=(const Integer& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  return *this;
}

RingElem operator+(RingElem u, const RingElem& v) {
  u += v;
  return u;
}

RingElem operator-(RingElem u, const RingElem& v) {
  u -= v;
  return u;
}

RingElem ring_mul(const RingElem& u, const RingElem& v) {
  require_same_order(u, v);
  const std::uint64_t n = u.order();
  std::vector<std::size_t> su, sv;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) != 0) {
      su.push_back(i);
    }
    if (sgn(v[i]) != 0) {
      sv.push_back(i);
    }
  }
  std::vector<Integer> out(n);
  for (std::size_t i : su) {
    for (std::size_t j : sv) {
      const std::size_t k = i + j < n ? i + j : i + j - n;
      mpz_addmul(out[k].get_mpz_t(), u[i].get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return RingElem(n, std::move(out));
}

RingElem res(std::uint64_t n, std::uint64_t d, const RingElem& v) {
  require_divisor(n, d);
  if (v.order() != n) {
    throw OrderMismatch("restriction expects an element of order " + std::to_string(n));
  }
  const std::uint64_t h = n / d;
  std::vector<Integer> c(h);
  for (std::size_t i = 0; i < n; ++i) {
    c[i % h] += v[i];
  }
  return RingElem(h, std::move(c));
}

RingElem lift(std::uint64_t n, std::uint64_t d, const RingElem& w) {
  require_divisor(n, d);
  if (w.order() != n / d) {
    throw OrderMismatch("induction expects an element of order " + std::to_string(n / d));
  }
  std::vector<Integer> c(n);
  std::copy(w.coeffs().begin(), w.coeffs().end(), c.begin());
  return RingElem(n, std::move(c));
}

RingElem p_poly_elem(std::uint64_t n, std::uint64_t d) {
  return RingElem::from_poly(n, p_poly(n, d));
}

RingElem ind(std::uint64_t n, std::uint64_t d, const RingElem& w) {
  return ring_mul(lift(n, d, w), p_poly_elem(n, d));
}

std::vector<RingElem> induced_ideal_generators(std::uint64_t n) {
  if (n < 2) {
    throw BadInput("induced ideal generators need n >= 2");
  }
  std::vector<RingElem> gens;
  for (std::uint64_t d : divisors(n)) {
    if (d > 1) {
      gens.push_back(ind(n, d, RingElem::one(n / d)));
    }
  }
  return gens;
}

CheckReport quotient_theorem_report(std::uint64_t n) {
  if (n < 2) {
    throw BadInput("quotient theorem needs n >= 2");
  }
  const IntPoly phi = phi_poly(n);
  CheckReport report("R(Z/" + std::to_string(n) + ") / sum_H Ind(R(H)) = Z[X]/<" +
                     pretty(phi) + ">");

  // Forward: every Ind(1_H) maps into <Phi_n>.
  const auto ds = divisors(n);
  const auto gens = induced_ideal_generators(n);
  bool forward = true;
  std::string forward_detail;
  std::size_t g = 0;
  for (std::uint64_t d : ds) {
    if (d == 1) {
      continue;
    }
    if (!rem_monic(gens[g++].to_poly(), phi).is_zero()) {
      forward = false;
      forward_detail = "Ind from index " + std::to_string(d) + " is not a multiple of Phi_n";
      break;
    }
  }
  report.add("every Ind_H^G(1_H) lies in <Phi_n>", forward, forward_detail);

  // Reverse: the certificate combination of prime-index generators hits Phi_n.
  const DecomposeCertificate cert = decompose(n);
  RingElem combo(n);
  for (std::size_t i = 0; i < cert.primes.size(); ++i) {
    const std::uint64_t p = cert.primes[i];
    const RingElem gen = ind(n, p, RingElem::one(n / p));
    combo += ring_mul(gen, RingElem::from_poly(n, cert.cofactors[i]));
  }
  const RingElem target = RingElem::from_poly(n, phi);
  report.add("Phi_n is reached from the Ind_H^G(1_H), [G:H] prime", combo == target);

  report.merge(theorem_check(n), "Z[X]: ");
  return report;
}

std::string to_string(const RingElem& e) {
  std::string out = std::to_string(e.order()) + ":";
  for (std::size_t i = 0; i < e.order(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += e[i].get_str();
  }
  return out;
}

RingElem parse_ring_elem(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected 'n:' prefix", 0);
  }
  std::uint64_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc{} || ptr != text.data() + colon || n == 0) {
    throw ParseError("expected a positive group order", 0);
  }
  auto c = detail::parse_integer_list(text.substr(colon + 1), colon + 1);
  if (c.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " multiplicities, got " +
                         std::to_string(c.size()),
                     text.size());
  }
  return RingElem(n, std::move(c));
}

RingElem parse_ring_elem(std::uint64_t n, std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    RingElem e = parse_ring_elem(text);
    if (e.order() != n) {
      throw ParseError("element has order " + std::to_string(e.order()) + ", expected " +
                           std::to_string(n),
                       0);
    }
    return e;
  }
  auto c = detail::parse_integer_list(text, 0);
  if (c.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " multiplicities, got " +
                         std::to_string(c.size()),
                     text.size());
  }
  return RingElem(n, std::move(c));
}

} // namespace cyclocert
