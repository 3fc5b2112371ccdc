#pragma once

#include <random>

#include "kfib/quad_number.hpp"
#include "kfib/rational.hpp"

namespace kfib::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num,
                                long denominator = 8) {
  std::uniform_int_distribution<long> dist(lo_num, hi_num);
  return Rational(dist(rng)) / Rational(denominator);
}

inline QuadNumber random_quad(std::mt19937_64& rng, const Rational& radicand,
                              long span = 40) {
  return QuadNumber(random_rational(rng, -span, span), random_rational(rng, -span, span),
                    radicand);
}

}  // namespace kfib::testing
