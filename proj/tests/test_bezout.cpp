#include <doctest.h>

#include <numeric>

#include "cyclocert/bezout.hpp"
#include "cyclocert/errors.hpp"
#include "oracles.hpp"

using namespace cyclocert;

TEST_CASE("bezout_xn examples") {
  SUBCASE("a=3 b=2") {
    const auto c = bezout_xn(3, 2);
    CHECK(c.d == 1);
    CHECK(c.A == IntPoly{1});
    CHECK(c.B == IntPoly{0, -1});
    REQUIRE(c.trace.steps.size() == 2);
    CHECK(c.trace.steps[0].quotient == 1);
    CHECK(c.trace.steps[0].r_next == 1);
    CHECK(c.trace.steps[0].f == IntPoly{0, 1});
    CHECK(verify_bezout(c).passed());
  }
  SUBCASE("b divides a") {
    const auto c = bezout_xn(4, 2);
    CHECK(c.d == 2);
    CHECK(c.A.is_zero());
    CHECK(c.B == IntPoly{1});
    CHECK(c.trace.steps.size() == 1);
    CHECK(verify_bezout(c).passed());
  }
  SUBCASE("a=6 b=4") {
    const auto c = bezout_xn(6, 4);
    CHECK(c.d == 2);
    CHECK(c.A == IntPoly{1});
    CHECK(c.B == IntPoly{0, 0, -1});
    CHECK(verify_bezout(c).passed());
  }
  SUBCASE("a equals b") {
    const auto c = bezout_xn(7, 7);
    CHECK(c.d == 7);
    CHECK(xn_minus_1(7) * c.A + xn_minus_1(7) * c.B == xn_minus_1(7));
    CHECK(verify_bezout(c).passed());
  }
  SUBCASE("swapped inputs") {
    const auto c = bezout_xn(2, 3);
    CHECK(c.trace.swapped);
    CHECK(c.trace.remainders.front() == 3);
    CHECK(c.A == IntPoly{0, -1});
    CHECK(c.B == IntPoly{1});
    CHECK(verify_bezout(c).passed());
  }
  CHECK_THROWS_AS(bezout_xn(0, 3), BadParameters);
}

TEST_CASE("verify_bezout detects corruption") {
  auto c = bezout_xn(3, 2);
  std::vector<Integer> a = c.A.coeffs();
  a[0] += 1;
  c.A = IntPoly(a);
  const auto report = verify_bezout(c);
  CHECK_FALSE(report.passed());
  CHECK(report.first_failure()->detail.find("coefficient") != std::string::npos);

  auto wrong_d = bezout_xn(12, 8);
  wrong_d.d = 2;
  CHECK_FALSE(verify_bezout(wrong_d).passed());
}

TEST_CASE("random pairs and trace invariants") {
  oracle::PolyGen gen(44);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = gen.uniform(1, 300), b = gen.uniform(1, 300);
    CAPTURE(a);
    CAPTURE(b);
    const auto c = bezout_xn(a, b);
    CHECK(c.d == std::gcd(a, b));
    CHECK(verify_bezout(c).passed());

    const auto& t = c.trace;
    CHECK(t.remainders.back() == c.d);
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const auto& st = t.steps[s];
      CHECK(st.r_prev == st.quotient * st.r_cur + st.r_next);
      CHECK(st.r_next < st.r_cur);
      // f_i from its defining quotient, and the lifted Euclid relation.
      CHECK(st.f == shift(div_exact(xn_minus_1(st.quotient * st.r_cur), xn_minus_1(st.r_cur)),
                          st.r_next));
      const IntPoly next = st.r_next == 0 ? IntPoly{} : xn_minus_1(st.r_next);
      CHECK(xn_minus_1(st.r_prev) - st.f * xn_minus_1(st.r_cur) == next);
    }
    CHECK(t.steps.back().r_next == 0);
  }
}

TEST_CASE("degenerate chains") {
  for (std::uint64_t b = 1; b <= 50; ++b) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const auto c = bezout_xn(k * b, b);
      CHECK(c.d == b);
      CHECK(c.A.is_zero());
      CHECK(c.B == IntPoly{1});
      CHECK(verify_bezout(c).passed());
    }
  }
}
