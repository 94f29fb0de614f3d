#include <doctest.h>

#include "cyclocert/charcheck.hpp"
#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/errors.hpp"

using namespace cyclocert;

TEST_CASE("zeta_pow") {
  CHECK(zeta_pow(4, 2).rep() == IntPoly{-1});
  CHECK(zeta_pow(7, 0).rep() == IntPoly{1});
  CHECK(zeta_pow(7, 7).rep() == IntPoly{1});
  CHECK(zeta_pow(7, -1) == zeta_pow(7, 6));
  CHECK(zeta_pow(1, 5).rep() == IntPoly{1});

  const CyclotomicField f3(3);
  CHECK(f3.add(zeta_pow(3, 1), zeta_pow(3, 2)).rep() == IntPoly{-1});
  CHECK(f3.mul(f3.zeta_pow(1), f3.zeta_pow(2)) == f3.from_integer(1));
}

TEST_CASE("field powers match direct reduction") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const CyclotomicField f(n);
    for (std::int64_t e = -3; e < static_cast<std::int64_t>(2 * n); ++e) {
      CHECK(f.zeta_pow(e) == zeta_pow(n, e));
      CHECK(f.zeta_pow(e).rep().degree() < f.modulus().degree());
    }
  }
}

TEST_CASE("induced_char_value") {
  CHECK(induced_char_value(6, 2, 2).rep() == IntPoly{2});
  CHECK(induced_char_value(6, 2, 1).rep().is_zero());
  CHECK(induced_char_value(6, 6, 0).rep() == IntPoly{6});
  CHECK(to_string(induced_char_value(6, 2, 1)) == "0");
  CHECK(to_string(induced_char_value(6, 2, 2)) == "2");
  CHECK_THROWS_AS(induced_char_value(6, 4, 1), NotADivisor);

  const CyclotomicField f(30);
  for (std::uint64_t d : divisors(30)) {
    for (std::int64_t m = 0; m < 30; ++m) {
      CHECK(induced_char_value(f, d, m) == induced_char_value(f, d, m + 30));
      CHECK(induced_char_value(f, d, m) == induced_char_value(f, d, m - 60));
    }
  }
}

TEST_CASE("verify_ind_char") {
  const auto r6 = verify_ind_char(6);
  CHECK(r6.passed());
  CHECK(r6.items().size() == 4);
  CHECK(verify_ind_char(1).passed());
  const auto r12 = verify_ind_char(12);
  CHECK(r12.passed());
  CHECK(r12.items().size() == 6);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    CHECK(verify_ind_char(n).passed());
  }
}

TEST_CASE("geometric sums of roots of unity vanish") {
  for (std::uint64_t d = 2; d <= 40; ++d) {
    const CyclotomicField f(d);
    for (std::uint64_t r = 1; r < d; ++r) {
      CycInt sum = f.zero();
      for (std::uint64_t k = 0; k < d; ++k) {
        f.accumulate(sum, static_cast<std::int64_t>(k * r));
      }
      CAPTURE(d);
      CAPTURE(r);
      CHECK(sum == f.zero());
    }
  }
}

TEST_CASE("characters multiply pointwise") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    const CyclotomicField f(n);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        const RingElem prod = ring_mul(RingElem::character(n, a), RingElem::character(n, b));
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(n); ++m) {
          const CycInt lhs = character_value(f, prod, m);
          CHECK(lhs == f.zeta_pow(static_cast<std::int64_t>(a + b) * m));
          CHECK(lhs == f.mul(character_value(f, RingElem::character(n, a), m),
                             character_value(f, RingElem::character(n, b), m)));
        }
      }
    }
  }
}

TEST_CASE("character of Ind(1_H) from the ring side") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const CyclotomicField f(n);
    for (std::uint64_t d : divisors(n)) {
      const RingElem g = ind(n, d, RingElem::one(n / d));
      for (std::int64_t m = 0; m < static_cast<std::int64_t>(n); ++m) {
        CHECK(character_value(f, g, m) == induced_char_value(f, d, m));
      }
    }
  }
  CHECK_THROWS_AS(character_value(CyclotomicField(4), RingElem::one(6), 0), OrderMismatch);
}
