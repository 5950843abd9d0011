#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "reeunital/gf3n.hpp"
#include "reeunital/gf8.hpp"

using namespace reeunital;

TEST_CASE("GF(8) basic structure") {
  std::set<std::uint8_t> vals;
  for (std::uint8_t b = 0; b < 8; ++b) vals.insert(F8(b).bits());
  REQUIRE(vals.size() == 8);

  // nonzero elements are cyclic of order 7 under multiplication
  std::set<std::uint8_t> powers;
  F8 x = F8::one();
  for (int k = 0; k < 7; ++k) {
    powers.insert(x.bits());
    x = x * F8::u();
  }
  REQUIRE(powers.size() == 7);
  REQUIRE(x == F8::one());  // u^7 = 1

  REQUIRE(F8::u().pow(3) == F8::u() + F8::one());  // u^3 = u + 1
  REQUIRE(F8::from_power(2) + F8::one() ==
          F8::from_power(6));  // u^6 = u^2 + 1 per the power table
}

TEST_CASE("GF(8) factorization of X^7 - 1") {
  // roots of X^3 + X + 1 are u, u^2, u^4
  for (int k : {1, 2, 4}) {
    F8 r = F8::from_power(k);
    REQUIRE(r.pow(3) + r + F8::one() == F8::zero());
  }
  // roots of X^3 + X^2 + 1 are u^3, u^6, u^5
  for (int k : {3, 6, 5}) {
    F8 r = F8::from_power(k);
    REQUIRE(r.pow(3) + r.pow(2) + F8::one() == F8::zero());
  }
  REQUIRE(F8::from_power(3).pow(4) == F8::from_power(5));  // u^5 = (u^3)^4
}

TEST_CASE("GF(8) inverse, log, errors") {
  for (std::uint8_t b = 1; b < 8; ++b) {
    F8 x(b);
    REQUIRE(x * x.inverse() == F8::one());
    REQUIRE(F8::from_power(x.log()) == x);
  }
  REQUIRE_THROWS_AS(F8::zero().inverse(), std::domain_error);
  REQUIRE_THROWS_AS(F8::zero().log(), std::domain_error);
  REQUIRE(F8::zero().pow(0) == F8::one());
  REQUIRE(F8::zero().pow(5) == F8::zero());
}

TEST_CASE("GF(3^n) context construction") {
  for (int n : {1, 3, 5, 7, 9}) {
    F3nCtx ctx(n);
    REQUIRE(ctx.n() == n);
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= 3;
    REQUIRE(ctx.q() == q);
    REQUIRE(F3nCtx::is_irreducible(ctx.modulus(), n));
  }
  REQUIRE_THROWS_AS(F3nCtx(2), std::invalid_argument);
  REQUIRE_THROWS_AS(F3nCtx(0), std::invalid_argument);
  REQUIRE_THROWS_AS(F3nCtx(11), std::invalid_argument);

  REQUIRE(F3nCtx(1).modulus_str() == "x");
  REQUIRE(F3nCtx(3).header() == "GF(3^3) mod x^3+2x+1");
  REQUIRE(F3nCtx(9).modulus_str() == "x^9+x^4+2");
}

TEST_CASE("GF(3^n) field axioms, sampled") {
  std::mt19937 rng(42);
  for (int n : {3, 5, 9}) {
    F3nCtx ctx(n);
    std::uniform_int_distribution<long long> d(0, ctx.q() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      F3nElt a = ctx.from_rank(d(rng)), b = ctx.from_rank(d(rng)),
             c = ctx.from_rank(d(rng));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + (-a) == ctx.zero());
      if (!a.is_zero()) REQUIRE(a * a.inverse() == ctx.one());
      // Frobenius is a homomorphism
      REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
      REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
}

TEST_CASE("Tits endomorphism: theta^2 = frobenius") {
  for (int n : {1, 3, 5}) {  // exhaustive
    F3nCtx ctx(n);
    long long theta_exp = 1;  // theta = phi^((n+1)/2), i.e. x -> x^(3^((n+1)/2))
    for (int i = 0; i < (n + 1) / 2; ++i) theta_exp *= 3;
    for (long long r = 0; r < ctx.q(); ++r) {
      F3nElt x = ctx.from_rank(r);
      REQUIRE(x.theta().theta() == x.frobenius());
      REQUIRE(x.theta() == x.pow(theta_exp));
    }
  }
  std::mt19937 rng(7);
  for (int n : {7, 9}) {  // sampled
    F3nCtx ctx(n);
    std::uniform_int_distribution<long long> d(0, ctx.q() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      F3nElt x = ctx.from_rank(d(rng));
      REQUIRE(x.theta().theta() == x.frobenius());
      // theta is multiplicative
      F3nElt y = ctx.from_rank(d(rng));
      REQUIRE((x * y).theta() == x.theta() * y.theta());
    }
  }
}

TEST_CASE("x^{(theta-1)(theta+1)} = x^2 on nonzero elements") {
  // (theta+1)(theta-1) = theta^2 - 1 = phi - 1, and x^phi = x^3
  for (int n : {1, 3}) {
    F3nCtx ctx(n);
    for (long long r = 1; r < ctx.q(); ++r) {
      F3nElt x = ctx.from_rank(r);
      F3nElt lhs = (x.theta() * x) * (x.theta() * x.inverse());
      // (x^{theta+1})^{theta-1} = x^{theta^2-1} = x^{3-1}
      F3nElt y = x.theta() * x;
      F3nElt lhs2 = y.theta() * y.inverse();
      REQUIRE(lhs2 == x * x);
      (void)lhs;
    }
  }
}

TEST_CASE("GF(3^n) rank round trip and errors") {
  F3nCtx ctx(3);
  for (long long r = 0; r < 27; ++r) REQUIRE(ctx.from_rank(r).rank() == r);
  REQUIRE_THROWS_AS(ctx.from_rank(27), std::invalid_argument);
  REQUIRE_THROWS_AS(ctx.from_rank(-1), std::invalid_argument);
  REQUIRE_THROWS_AS(ctx.zero().inverse(), std::domain_error);
  REQUIRE(ctx.from_coeffs({1, 2}).str() == "120");
  REQUIRE(ctx.scalar(-1) == ctx.from_rank(2));

  F3nCtx other(5);
  REQUIRE_THROWS_AS(ctx.one() + other.one(), std::invalid_argument);
}
