#include "kfib/kappa_context.hpp"

#include <utility>

#include "kfib/errors.hpp"

namespace kfib {

KappaContext::KappaContext(Rational kappa, std::size_t cache_length)
    : kappa_(std::move(kappa)), disc_(kappa_ * kappa_ + 4) {
  if (kappa_ == 0) throw usage_error("kappa must be a nonzero rational");
  tau_ = (QuadNumber(kappa_) - QuadNumber::sqrt_of(disc_)) * QuadNumber(Rational(1, 2));
  if (cache_length < 2) cache_length = 2;
  fib_.reserve(cache_length);
  fib_.emplace_back(0);
  fib_.emplace_back(1);
  while (fib_.size() < cache_length) {
    fib_.push_back(kappa_ * fib_[fib_.size() - 1] + fib_[fib_.size() - 2]);
  }
}

Rational KappaContext::fib(std::size_t n) const {
  if (n < fib_.size()) return fib_[n];
  Rational prev = fib_[fib_.size() - 2];
  Rational curr = fib_[fib_.size() - 1];
  for (std::size_t i = fib_.size() - 1; i < n; ++i) {
    Rational next = kappa_ * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

QuadNumber KappaContext::fib_binet(std::size_t n) const {
  const QuadNumber numerator =
      qpow(kappa_minus_tau(), static_cast<long>(n)) - qpow(tau_, static_cast<long>(n));
  return numerator / QuadNumber::sqrt_of(disc_);
}

Rational KappaContext::lucas_like(std::size_t n) const {
  if (n == 0) throw usage_error("lucas_like is defined for n >= 1");
  return fib(n - 1) + fib(n + 1);
}

}  // namespace kfib
