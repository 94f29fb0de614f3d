#include <doctest.h>

#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/decompose.hpp"
#include "cyclocert/errors.hpp"

using namespace cyclocert;

namespace {

IntPoly assemble(const DecomposeCertificate& c) {
  IntPoly sum;
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    sum += p_poly(c.n, c.primes[i]) * c.cofactors[i];
  }
  return sum;
}

} // namespace

TEST_CASE("prime powers need only the trivial cofactor") {
  const auto c = decompose(8);
  CHECK(c.primes == std::vector<std::uint64_t>{2});
  REQUIRE(c.cofactors.size() == 1);
  CHECK(c.cofactors[0] == IntPoly{1});
  CHECK(div_exact(xn_minus_1(8), xn_minus_1(4)) == IntPoly{1, 0, 0, 0, 1});
  CHECK(verify_certificate(c).passed());
  for (std::uint64_t n : {2u, 3u, 9u, 27u, 49u, 128u}) {
    CHECK(decompose(n).cofactors == std::vector<IntPoly>{IntPoly{1}});
  }
}

TEST_CASE("decompose 6") {
  const auto c = decompose(6);
  CHECK(c.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(c.phi == IntPoly{1, -1, 1});
  CHECK(IntPoly{1, 0, 0, 1} * c.cofactors[0] + IntPoly{1, 0, 1, 0, 1} * c.cofactors[1] ==
        IntPoly{1, -1, 1});
  CHECK(verify_certificate(c).passed());

  // The cofactors are not unique; the quoted pair also satisfies the identity.
  DecomposeCertificate other = c;
  other.cofactors = {IntPoly{0, -1}, IntPoly{1}};
  CHECK(verify_certificate(other).passed());
}

TEST_CASE("decompose 12 and 30") {
  CHECK(verify_certificate(decompose(12)).passed());
  const auto c30 = decompose(30);
  CHECK(c30.primes.size() == 3);
  CHECK(assemble(c30) == phi_poly(30));
  CHECK(verify_certificate(c30).passed());
}

TEST_CASE("certificates for every n up to 150") {
  for (std::uint64_t n = 2; n <= 150; ++n) {
    CAPTURE(n);
    const auto c = decompose(n);
    CHECK(verify_certificate(c).passed());
    CHECK(assemble(c) == phi_poly(n));
  }
}

TEST_CASE("verification detects tampering") {
  const auto good = decompose(12);

  SUBCASE("perturbed cofactor") {
    auto bad = good;
    std::vector<Integer> h = bad.cofactors[0].coeffs();
    if (h.empty()) {
      h.push_back(0);
    }
    h[0] += 1;
    bad.cofactors[0] = IntPoly(h);
    const auto r = verify_certificate(bad);
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->detail.find("first mismatch") != std::string::npos);
  }
  SUBCASE("phi replaced by Phi_{n/p}") {
    auto bad = good;
    bad.phi = phi_poly(6);
    CHECK_FALSE(verify_certificate(bad).passed());
  }
  SUBCASE("malformed shapes") {
    auto bad = good;
    bad.primes = {2};
    CHECK_THROWS_AS(verify_certificate(bad), MalformedCertificate);
    bad = good;
    bad.primes = {3, 2};
    CHECK_THROWS_AS(verify_certificate(bad), MalformedCertificate);
    bad = good;
    bad.cofactors.pop_back();
    CHECK_THROWS_AS(verify_certificate(bad), MalformedCertificate);
    bad = good;
    bad.n = 1;
    CHECK_THROWS_AS(verify_certificate(bad), MalformedCertificate);
  }
}

TEST_CASE("n below 2 is rejected") {
  CHECK_THROWS_AS(decompose(1), BadInput);
  CHECK_THROWS_AS(decompose(0), BadInput);
  CHECK_THROWS_AS(theorem_check(1), BadInput);
}

TEST_CASE("trace records each recursion level") {
  for (std::uint64_t n : {6u, 12u, 30u, 36u, 60u, 72u, 210u, 180u}) {
    CAPTURE(n);
    const auto res = decompose(n, DecomposeOptions{true});
    REQUIRE(res.trace.has_value());
    CHECK(res.trace->levels.size() + 1 == factorize(n).size());
    CHECK(verify_trace(*res.trace).passed());
    for (const auto& level : res.trace->levels) {
      CHECK(level.peeled_prime == factorize(level.n).back().prime);
      for (std::size_t i = 0; i < level.g.size(); ++i) {
        CHECK(level.g[i] == level.witness_quotients[i] * level.substituted[i]);
        CHECK(verify_bezout(level.bezout[i]).passed());
      }
    }
  }
  CHECK_FALSE(decompose(30).n == 0);
  CHECK_FALSE(decompose(30, DecomposeOptions{}).trace.has_value());
}

TEST_CASE("a corrupted trace fails its own check") {
  auto res = decompose(30, DecomposeOptions{true});
  auto& g = res.trace->levels.back().g.front();
  g += IntPoly{1};
  CHECK_FALSE(verify_trace(*res.trace).passed());
}

TEST_CASE("theorem_check") {
  const auto r2 = theorem_check(2);
  CHECK(r2.passed());
  CHECK(q_poly(2, 2) == IntPoly{1});

  const auto r6 = theorem_check(6);
  CHECK(r6.passed());
  CHECK(theorem_check(30).passed());
  CHECK(theorem_check(36).passed());
  for (std::uint64_t n = 2; n <= 80; ++n) {
    CHECK(theorem_check(n).passed());
  }
}
