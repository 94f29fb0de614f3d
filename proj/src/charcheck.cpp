#include "cyclocert/charcheck.hpp"

#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/errors.hpp"

namespace cyclocert {

namespace {

std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = e % sn;
  if (r < 0) {
    r += sn;
  }
  return static_cast<std::uint64_t>(r);
}

} // namespace

CycInt::CycInt(std::uint64_t n, const IntPoly& rep, const IntPoly& modulus)
    : n_(n), rep_(rem_monic(rep, modulus)) {}

CyclotomicField::CyclotomicField(std::uint64_t n) : n_(n), phi_(phi_poly(n)) {
  powers_.reserve(n);
  IntPoly cur = IntPoly::constant(1);
  const std::size_t deg = phi_.size() - 1;
  for (std::uint64_t e = 0; e < n; ++e) {
    powers_.push_back(cur);
    // Multiply by X and fold the overflow X^deg back via Phi_n (monic).
    cur = shift(cur, 1);
    if (cur.size() > deg) {
      const Integer top = cur.coeffs().back();
      cur.add_scaled_shifted(phi_, -top, 0);
    }
  }
}

CycInt CyclotomicField::from_integer(const Integer& c) const {
  return CycInt(n_, IntPoly::constant(c), phi_);
}

CycInt CyclotomicField::zeta_pow(std::int64_t e) const {
  return CycInt(n_, powers_[reduce_exponent(e, n_)]);
}

CycInt CyclotomicField::add(const CycInt& a, const CycInt& b) const {
  return CycInt(n_, a.rep_ + b.rep_);
}

CycInt CyclotomicField::mul(const CycInt& a, const CycInt& b) const {
  return CycInt(n_, a.rep_ * b.rep_, phi_);
}

void CyclotomicField::accumulate(CycInt& a, std::int64_t e, const Integer& c) const {
  a.rep_.add_scaled_shifted(powers_[reduce_exponent(e, n_)], c, 0);
}

CycInt zeta_pow(std::uint64_t n, std::int64_t e) {
  if (n == 0) {
    throw BadParameters("conductor must be >= 1");
  }
  const IntPoly phi = phi_poly(n);
  return CycInt(n, IntPoly::monomial(reduce_exponent(e, n)), phi);
}

CycInt induced_char_value(const CyclotomicField& field, std::uint64_t d, std::int64_t m) {
  const std::uint64_t n = field.conductor();
  if (d == 0 || n % d != 0) {
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  const std::int64_t step = static_cast<std::int64_t>(n / d);
  const std::int64_t mm = static_cast<std::int64_t>(reduce_exponent(m, n));
  CycInt value = field.zero();
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(d); ++k) {
    field.accumulate(value, (k * step % static_cast<std::int64_t>(n)) * mm);
  }
  return value;
}

CycInt induced_char_value(std::uint64_t n, std::uint64_t d, std::int64_t m) {
  if (n == 0 || d == 0 || n % d != 0) {
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  return induced_char_value(CyclotomicField(n), d, m);
}

CycInt character_value(const CyclotomicField& field, const RingElem& v, std::int64_t m) {
  if (v.order() != field.conductor()) {
    throw OrderMismatch("element order " + std::to_string(v.order()) +
                        " does not match conductor " + std::to_string(field.conductor()));
  }
  const std::int64_t mm = static_cast<std::int64_t>(reduce_exponent(m, field.conductor()));
  CycInt value = field.zero();
  for (std::size_t k = 0; k < v.order(); ++k) {
    if (sgn(v[k]) != 0) {
      field.accumulate(value, static_cast<std::int64_t>(k) * mm, v[k]);
    }
  }
  return value;
}

CheckReport verify_ind_char(std::uint64_t n) {
  if (n == 0) {
    throw BadParameters("group order must be >= 1");
  }
  CheckReport report("induced characters n=" + std::to_string(n));
  const CyclotomicField field(n);
  for (std::uint64_t d : divisors(n)) {
    std::string detail;
    bool ok = true;
    for (std::uint64_t m = 0; m < n && ok; ++m) {
      // sigma^m lies in <sigma^d> exactly when d | m.
      const Integer expected = (m % d == 0) ? Integer(d) : Integer(0);
      const CycInt got = induced_char_value(field, d, static_cast<std::int64_t>(m));
      if (got != field.from_integer(expected)) {
        ok = false;
        detail = "m=" + std::to_string(m) + " gave " + to_string(got) + ", expected " +
                 expected.get_str();
      }
    }
    report.add("index " + std::to_string(d) + " over all " + std::to_string(n) + " elements",
               ok, detail);
  }
  return report;
}

std::string to_string(const CycInt& c) {
  return c.rep().is_zero() ? std::string("0") : to_string(c.rep());
}

} // namespace cyclocert
