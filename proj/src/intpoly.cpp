#include "cyclocert/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cyclocert/errors.hpp"

namespace cyclocert {

namespace {

using Coeffs = std::vector<Integer>;

// Trims trailing zeros in place.
void trim(Coeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) {
    c.pop_back();
  }
}

std::vector<std::size_t> support_of(std::span<const Integer> c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) {
      idx.push_back(i);
    }
  }
  return idx;
}

// out += a * b, touching only nonzero pairs.
void schoolbook_into(std::span<const Integer> a, std::span<const Integer> b,
                     std::span<Integer> out) {
  const auto sa = support_of(a);
  const auto sb = support_of(b);
  for (std::size_t i : sa) {
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j : sb) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

void add_into(std::span<const Integer> src, std::span<Integer> dst) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] += src[i];
  }
}

// out += a * b with Karatsuba splitting once both operands reach threshold.
// out must hold at least a.size() + b.size() - 1 entries.
void karatsuba_into(std::span<const Integer> a, std::span<const Integer> b,
                    std::span<Integer> out, std::size_t threshold) {
  if (a.empty() || b.empty()) {
    return;
  }
  if (a.size() < b.size()) {
    std::swap(a, b);
  }
  const std::size_t nb = b.size();
  if (nb < threshold || nb < 2) {
    schoolbook_into(a, b, out);
    return;
  }
  if (a.size() > nb) {
    // Unbalanced: cut the long operand into blocks of the short one's length.
    for (std::size_t off = 0; off < a.size(); off += nb) {
      const std::size_t len = std::min(nb, a.size() - off);
      karatsuba_into(a.subspan(off, len), b, out.subspan(off), threshold);
    }
    return;
  }

  const std::size_t n = nb;
  const std::size_t h = n / 2;
  const auto a0 = a.first(h), a1 = a.subspan(h);
  const auto b0 = b.first(h), b1 = b.subspan(h);

  Coeffs z0(2 * h - 1), z2(2 * (n - h) - 1);
  karatsuba_into(a0, b0, z0, threshold);
  karatsuba_into(a1, b1, z2, threshold);

  Coeffs sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  add_into(a0, sa);
  add_into(b0, sb);
  Coeffs z1(sa.size() + sb.size() - 1);
  karatsuba_into(sa, sb, z1, threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) {
    z1[i] -= z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    z1[i] -= z2[i];
  }

  add_into(z0, out);
  add_into(z1, out.subspan(h));
  add_into(z2, out.subspan(2 * h));
}

bool dense(const IntPoly& p) {
  return 2 * p.support().size() >= p.size();
}

IntPoly multiply(const IntPoly& p, const IntPoly& q, std::size_t threshold,
                 bool require_dense) {
  if (p.is_zero() || q.is_zero()) {
    return {};
  }
  Coeffs out(p.size() + q.size() - 1);
  const bool use_karatsuba = threshold > 0 &&
                             std::min(p.size(), q.size()) >= threshold &&
                             (!require_dense || (dense(p) && dense(q)));
  if (use_karatsuba) {
    karatsuba_into(p.coeffs(), q.coeffs(), out, threshold);
  } else {
    schoolbook_into(p.coeffs(), q.coeffs(), out);
  }
  return IntPoly(std::move(out));
}

// Long division of p by q, returning (quotient, remainder). A leading step
// that leaves the integers raises NotDivisible.
std::pair<Coeffs, Coeffs> long_divide(const IntPoly& p, const IntPoly& q) {
  const std::size_t dq = q.size() - 1;
  Coeffs rem = p.coeffs();
  if (rem.size() < q.size()) {
    return {Coeffs{}, std::move(rem)};
  }
  const Integer& lead = q.coeffs().back();
  const bool monic = lead == 1;
  const auto qs = support_of(q.coeffs());
  Coeffs quot(rem.size() - dq);
  Integer step;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + dq];
    if (sgn(top) == 0) {
      continue;
    }
    if (monic) {
      step = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
        throw NotDivisible("leading coefficient " + top.get_str() +
                           " of X^" + std::to_string(i + dq) +
                           " is not divisible by " + lead.get_str());
      }
      mpz_divexact(step.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    for (std::size_t j : qs) {
      mpz_submul(rem[i + j].get_mpz_t(), step.get_mpz_t(), q.coeffs()[j].get_mpz_t());
    }
    quot[i] = step;
  }
  rem.resize(dq);
  trim(rem);
  trim(quot);
  return {std::move(quot), std::move(rem)};
}

} // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) {
    coeffs_.emplace_back(c);
  }
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) {
  return IntPoly(Coeffs{c});
}

IntPoly IntPoly::monomial(std::size_t k, const Integer& c) {
  Coeffs v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

std::vector<std::size_t> IntPoly::support() const {
  return support_of(coeffs_);
}

void IntPoly::normalize() {
  trim(coeffs_);
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  add_into(rhs.coeffs_, coeffs_);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = mul(*this, rhs);
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) {
    x *= c;
  }
  return *this;
}

void IntPoly::add_scaled_shifted(const IntPoly& rhs, const Integer& c, std::size_t shift) {
  if (rhs.is_zero() || sgn(c) == 0) {
    return;
  }
  if (coeffs_.size() < rhs.coeffs_.size() + shift) {
    coeffs_.resize(rhs.coeffs_.size() + shift);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), rhs.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  normalize();
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  IntPoly r = p;
  r += q;
  return r;
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  IntPoly r = p;
  r -= q;
  return r;
}

IntPoly neg(const IntPoly& p) {
  Coeffs c = p.coeffs();
  for (auto& x : c) {
    x = -x;
  }
  return IntPoly(std::move(c));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  return multiply(p, q, detail::kKaratsubaThreshold, true);
}

IntPoly detail::mul_with_threshold(const IntPoly& p, const IntPoly& q, std::size_t threshold) {
  return multiply(p, q, threshold, false);
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) {
    throw DivisionByZero("division by the zero polynomial");
  }
  auto [quot, rem] = long_divide(p, q);
  if (!rem.empty()) {
    throw NotDivisible("nonzero remainder of degree " + std::to_string(rem.size() - 1) +
                       " dividing " + to_string(p) + " by " + to_string(q));
  }
  return IntPoly(std::move(quot));
}

IntPoly rem_monic(const IntPoly& p, const IntPoly& q) {
  if (!q.is_monic() || q.degree() < 1) {
    throw NotMonic("modulus " + to_string(q) + " is not monic of positive degree");
  }
  return IntPoly(long_divide(p, q).second);
}

IntPoly compose_power(const IntPoly& p, std::size_t k) {
  if (k == 0) {
    throw BadParameters("compose_power needs k >= 1");
  }
  if (k == 1 || p.size() <= 1) {
    return p;
  }
  Coeffs c((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    c[i * k] = p.coeffs()[i];
  }
  return IntPoly(std::move(c));
}

IntPoly xn_minus_1(std::size_t m) {
  if (m == 0) {
    throw BadParameters("X^m - 1 needs m >= 1");
  }
  Coeffs c(m + 1);
  c[0] = -1;
  c[m] = 1;
  return IntPoly(std::move(c));
}

IntPoly shift(const IntPoly& p, std::size_t k) {
  if (p.is_zero()) {
    return p;
  }
  Coeffs c(k);
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPoly(std::move(c));
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::optional<std::size_t> first_mismatch(const IntPoly& p, const IntPoly& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (p.coeff(i) != q.coeff(i)) {
      return i;
    }
  }
  return std::nullopt;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += p.coeffs()[i].get_str();
  }
  return out;
}

std::vector<Integer> detail::parse_integer_list(std::string_view text, std::size_t base_offset) {
  Coeffs c;
  if (text.empty()) {
    return c;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view tok = text.substr(start, end - start);
    const std::size_t sign = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (sign == tok.size()) {
      throw ParseError("expected an integer", base_offset + start);
    }
    for (std::size_t i = sign; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') {
        throw ParseError(std::string("unexpected character '") + tok[i] + "'",
                         base_offset + start + i);
      }
    }
    c.emplace_back(std::string(tok), 10);
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return c;
}

IntPoly parse_poly(std::string_view text) {
  return IntPoly(detail::parse_integer_list(text, 0));
}

std::string pretty(const IntPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p.coeffs()[i];
    if (sgn(c) == 0) {
      continue;
    }
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
    }
    if (i >= 1) {
      os << 'X';
    }
    if (i >= 2) {
      os << '^' << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << pretty(p);
}

} // namespace cyclocert
