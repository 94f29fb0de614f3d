#include "cyclocert/bezout.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cyclocert/errors.hpp"

namespace cyclocert {

BezoutCertificate bezout_xn(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    throw BadParameters("bezout_xn needs positive exponents");
  }
  BezoutCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.trace.swapped = a < b;

  std::uint64_t r_prev = std::max(a, b);
  std::uint64_t r_cur = std::min(a, b);
  cert.trace.remainders = {r_prev, r_cur};

  // Coefficients expressing X^{r_prev} - 1 and X^{r_cur} - 1 in terms of
  // (X^{r_0} - 1, X^{r_1} - 1).
  IntPoly u_prev = IntPoly::constant(1), v_prev;
  IntPoly u_cur, v_cur = IntPoly::constant(1);

  while (true) {
    const std::uint64_t q = r_prev / r_cur;
    const std::uint64_t r_next = r_prev % r_cur;
    IntPoly f = shift(div_exact(xn_minus_1(q * r_cur), xn_minus_1(r_cur)), r_next);
    if (r_next == 0) {
      cert.trace.steps.push_back({r_prev, r_cur, q, r_next, std::move(f)});
      break;
    }
    IntPoly u_next = u_prev - f * u_cur;
    IntPoly v_next = v_prev - f * v_cur;
    cert.trace.steps.push_back({r_prev, r_cur, q, r_next, std::move(f)});
    cert.trace.remainders.push_back(r_next);

    u_prev = std::exchange(u_cur, std::move(u_next));
    v_prev = std::exchange(v_cur, std::move(v_next));
    r_prev = std::exchange(r_cur, r_next);
  }

  cert.d = r_cur;
  if (cert.trace.swapped) {
    cert.A = std::move(v_cur);
    cert.B = std::move(u_cur);
  } else {
    cert.A = std::move(u_cur);
    cert.B = std::move(v_cur);
  }
  return cert;
}

CheckReport verify_bezout(const BezoutCertificate& c) {
  CheckReport report("bezout a=" + std::to_string(c.a) + " b=" + std::to_string(c.b));
  if (c.a == 0 || c.b == 0 || c.d == 0) {
    report.add("positive exponents", false, "a, b and d must be >= 1");
    return report;
  }
  const std::uint64_t g = std::gcd(c.a, c.b);
  report.add("d = gcd(a, b)", g == c.d,
             "d=" + std::to_string(c.d) + " gcd=" + std::to_string(g));

  const IntPoly lhs = xn_minus_1(c.a) * c.A + xn_minus_1(c.b) * c.B;
  const IntPoly rhs = xn_minus_1(c.d);
  const auto bad = first_mismatch(lhs, rhs);
  report.add("(X^a-1)A + (X^b-1)B = X^d-1", !bad.has_value(),
             bad ? "first mismatch at coefficient " + std::to_string(*bad) : std::string{});
  return report;
}

} // namespace cyclocert
