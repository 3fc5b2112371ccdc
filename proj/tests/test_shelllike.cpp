#include <doctest.h>

#include <random>

#include "kfib/errors.hpp"
#include "kfib/shell_like.hpp"
#include "test_helpers.hpp"

using namespace kfib;
using kfib::testing::random_rational;

TEST_CASE("kappa = 1 expansion") {
  KappaContext ctx{Rational(1)};
  const QuadNumber tau = ctx.tau();
  const auto series = ptilde_series<QuadNumber>(ctx, 5);
  CHECK(series[0] == QuadNumber(1));
  CHECK(series[1] == tau);
  CHECK(series[2] == QuadNumber(3) * qpow(tau, 2));
  CHECK(series[3] == QuadNumber(4) * qpow(tau, 3));
  CHECK(series[4] == QuadNumber(7) * qpow(tau, 4));
  CHECK(series[5] == QuadNumber(11) * qpow(tau, 5));
}

TEST_CASE("kappa = 2 expansion") {
  KappaContext ctx{Rational(2)};
  const QuadNumber tau = ctx.tau();
  const auto series = ptilde_series<QuadNumber>(ctx, 3);
  CHECK(series[0] == QuadNumber(1));
  CHECK(series[1] == QuadNumber(2) * tau);
  CHECK(series[2] == QuadNumber(6) * qpow(tau, 2));
  CHECK(series[3] == QuadNumber(14) * qpow(tau, 3));
}

TEST_CASE("constant coefficient is one") {
  for (const Rational& kappa : {Rational(1), Rational(5) / 3, Rational(4)}) {
    KappaContext ctx{kappa};
    CHECK(ptilde_series<QuadNumber>(ctx, 0)[0] == QuadNumber(1));
  }
}

TEST_CASE("closed coefficient form") {
  KappaContext ctx{Rational(1)};
  const QuadNumber tau = ctx.tau();
  CHECK(ptilde_coeff(ctx, 2) == QuadNumber(3) * qpow(tau, 2));
  CHECK(ptilde_coeff(ctx, 5) == QuadNumber(11) * qpow(tau, 5));
  KappaContext three{Rational(3)};
  CHECK(ptilde_coeff(three, 1) == QuadNumber(3) * three.tau());
  CHECK_THROWS_AS(ptilde_coeff(ctx, 0), usage_error);
}

TEST_CASE("series coefficients equal the closed form") {
  for (const Rational& kappa :
       {Rational(1), Rational(2), Rational(3), Rational(1) / 2}) {
    KappaContext ctx{kappa};
    const auto series = ptilde_series<QuadNumber>(ctx, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
      CHECK(series[n] == ptilde_coeff(ctx, n));
    }
  }
}

TEST_CASE("termwise derivative of the expansion") {
  KappaContext ctx{Rational(1)};
  const QuadNumber tau = ctx.tau();
  const auto d = diff(ptilde_series<QuadNumber>(ctx, 5));
  CHECK(d[0] == tau);
  CHECK(d[1] == QuadNumber(6) * qpow(tau, 2));
  CHECK(d[2] == QuadNumber(12) * qpow(tau, 3));
}

TEST_CASE("schwarz coefficients and round trip") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    CaratheodoryPrefix<QuadNumber> c;
    c.c1 = QuadNumber(random_rational(rng, -16, 16));
    c.c2 = QuadNumber(random_rational(rng, -16, 16));
    c.c3 = QuadNumber(random_rational(rng, -16, 16));

    const auto u = schwarz_series(c, 3);
    // h = (1 + u)/(1 - u) recovers the prefix exactly.
    const auto one = TruncatedSeries<QuadNumber>::constant(QuadNumber(1), 3);
    const auto h = div(one + u, one - u);
    CHECK(h[1] == c.c1);
    CHECK(h[2] == c.c2);
    CHECK(h[3] == c.c3);
  }
}

TEST_CASE("subordination expansion") {
  KappaContext ctx{Rational(1)};

  SUBCASE("zero data gives the constant series") {
    CaratheodoryPrefix<QuadNumber> c;
    const auto series = subordination_expand(ctx, c, 3);
    CHECK(series[0] == QuadNumber(1));
    CHECK(series[1] == QuadNumber{});
    CHECK(series[2] == QuadNumber{});
    CHECK(series[3] == QuadNumber{});
  }

  SUBCASE("the half-plane extreme reproduces the generating function") {
    // h = (1+z)/(1-z) makes the inner function the identity.
    CaratheodoryPrefix<QuadNumber> c;
    c.c1 = QuadNumber(2);
    c.c2 = QuadNumber(2);
    c.c3 = QuadNumber(2);
    const auto series = subordination_expand(ctx, c, 3);
    const auto direct = ptilde_series<QuadNumber>(ctx, 3);
    CHECK(series[1] == direct[1]);
    CHECK(series[2] == direct[2]);
    CHECK(series[3] == direct[3]);
  }

  SUBCASE("agrees with the composition oracle") {
    std::mt19937_64 rng(43);
    for (const Rational& kappa : {Rational(1), Rational(2), Rational(1) / 2}) {
      KappaContext local{kappa};
      for (int i = 0; i < 100; ++i) {
        CaratheodoryPrefix<QuadNumber> c;
        c.c1 = QuadNumber(random_rational(rng, -16, 16));
        c.c2 = QuadNumber(random_rational(rng, -16, 16));
        c.c3 = QuadNumber(random_rational(rng, -16, 16));
        const auto closed = subordination_expand(local, c, 3);
        const auto composed =
            compose(ptilde_series<QuadNumber>(local, 3), schwarz_series(c, 3));
        CHECK(closed == composed);
      }
    }
  }

  SUBCASE("float mode matches the oracle tightly") {
    std::mt19937_64 rng(47);
    KappaContext local{Rational(2)};
    for (int i = 0; i < 20; ++i) {
      CaratheodoryPrefix<BigFloat> c;
      c.c1 = to_bigfloat(random_rational(rng, -16, 16));
      c.c2 = to_bigfloat(random_rational(rng, -16, 16));
      c.c3 = to_bigfloat(random_rational(rng, -16, 16));
      const auto closed = subordination_expand(local, c, 3);
      const auto composed =
          compose(ptilde_series<BigFloat>(local, 3), schwarz_series(c, 3));
      CHECK(max_abs_difference(closed, composed) < BigFloat(1e-12));
    }
  }

  CaratheodoryPrefix<QuadNumber> c;
  CHECK_THROWS_AS(subordination_expand(ctx, c, 4), usage_error);
}

TEST_CASE("boundary real-part probe") {
  KappaContext ctx{Rational(1)};
  const BigFloat beta = to_bigfloat(QuadNumber::sqrt_of(Rational(5))) / 10;

  CHECK(min_real_part_probe(ctx, BigFloat(0.5), 256) >= beta - BigFloat(1e-9));
  CHECK(min_real_part_probe(ctx, BigFloat(0.95), 1024) >= beta - BigFloat(1e-6));

  // Near the origin the function is close to its value 1 at 0.
  const BigFloat near_origin = min_real_part_probe(ctx, BigFloat(0.01), 16);
  CHECK(boost::multiprecision::abs(near_origin - 1) < 0.05);

  CHECK_THROWS_AS(min_real_part_probe(ctx, BigFloat(1.5), 64), usage_error);
  CHECK_THROWS_AS(min_real_part_probe(ctx, BigFloat(0.5), 4), usage_error);
}

TEST_CASE("caratheodory samples") {
  const auto samples = caratheodory_samples(8);
  CHECK(samples.size() == 8);
  bool has_corner = false;
  for (const auto& sample : samples) {
    CHECK(sample.within_coefficient_bound());
    if (sample.c1 == QuadNumber(2) && sample.c2 == QuadNumber(2)) has_corner = true;
  }
  CHECK(has_corner);

  const auto single = caratheodory_samples(1);
  CHECK(single.size() == 1);
  CHECK_THROWS_AS(caratheodory_samples(0), usage_error);
}
