#pragma once

#include <cstddef>
#include <vector>

#include "kfib/quad_number.hpp"
#include "kfib/rational.hpp"

namespace kfib {

// Fixes a nonzero rational kappa and carries everything derived from it:
// the discriminant kappa^2 + 4, the negative root tau of t^2 - kappa t - 1,
// and a prefix of the kappa-Fibonacci sequence F_0 = 0, F_1 = 1,
// F_{n+1} = kappa F_n + F_{n-1}.
//
// Immutable after construction; safe to share across threads.
class KappaContext {
 public:
  explicit KappaContext(Rational kappa, std::size_t cache_length = 64);

  const Rational& kappa() const { return kappa_; }
  const Rational& discriminant() const { return disc_; }
  const QuadNumber& tau() const { return tau_; }
  QuadNumber kappa_minus_tau() const { return QuadNumber(kappa_) - tau_; }

  // F_n by iterating the recurrence.
  Rational fib(std::size_t n) const;

  // F_n via ((kappa - tau)^n - tau^n) / sqrt(discriminant); exact, and
  // always rational-valued (the radical components cancel).
  QuadNumber fib_binet(std::size_t n) const;

  // F_{n-1} + F_{n+1}; defined for n >= 1 only.
  Rational lucas_like(std::size_t n) const;

 private:
  Rational kappa_;
  Rational disc_;
  QuadNumber tau_;
  std::vector<Rational> fib_;
};

}  // namespace kfib
