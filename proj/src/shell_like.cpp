#include "kfib/shell_like.hpp"

#include "kfib/errors.hpp"

namespace kfib {

QuadNumber ptilde_coeff(const KappaContext& ctx, std::size_t n) {
  if (n == 0) throw usage_error("the closed coefficient form starts at n = 1");
  return QuadNumber(ctx.lucas_like(n)) * qpow(ctx.tau(), static_cast<long>(n));
}

BigFloat min_real_part_probe(const KappaContext& ctx, const BigFloat& radius,
                             std::size_t grid_size) {
  if (!(radius > 0 && radius < 1)) {
    throw usage_error("probe radius must lie in (0, 1)");
  }
  if (grid_size < 8) throw usage_error("probe grid needs at least 8 points");

  const BigFloat tau = to_bigfloat(ctx.tau());
  const BigFloat kappa = to_bigfloat(ctx.kappa());
  const BigFloat tau_sq = tau * tau;
  const BigFloat two_pi = 2 * bigfloat_pi();

  BigFloat minimum;
  for (std::size_t j = 0; j < grid_size; ++j) {
    const BigFloat theta = two_pi * static_cast<long>(j) / static_cast<long>(grid_size);
    const Complex z = Complex(radius) * unit_circle_point(theta);
    const Complex z_sq = z * z;
    const Complex value = (Complex(BigFloat(1)) + Complex(tau_sq) * z_sq) /
                          (Complex(BigFloat(1)) - Complex(kappa * tau) * z -
                           Complex(tau_sq) * z_sq);
    if (j == 0 || value.re < minimum) minimum = value.re;
  }
  return minimum;
}

std::vector<CaratheodoryPrefix<QuadNumber>> caratheodory_samples(std::size_t count) {
  if (count == 0) throw usage_error("sample count must be positive");

  // Extreme points first: u sweeps [-1, 1] uniformly (endpoints included),
  // c_n = 2 T_n(u).
  std::size_t extremes = count < 2 ? count : (count + 1) / 2;
  if (count <= 4) extremes = count;
  std::vector<CaratheodoryPrefix<QuadNumber>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < extremes; ++k) {
    const Rational u = extremes == 1
                           ? Rational(1)
                           : Rational(-1) + Rational(2 * static_cast<long>(k)) /
                                                Rational(static_cast<long>(extremes) - 1);
    CaratheodoryPrefix<QuadNumber> c;
    c.c1 = QuadNumber(2 * u);
    c.c2 = QuadNumber(2 * (2 * u * u - 1));
    c.c3 = QuadNumber(2 * (4 * u * u * u - 3 * u));
    out.push_back(c);
  }
  // Fill with midpoint convex combinations of adjacent extremes; the class
  // is convex, so these stay admissible.
  std::size_t left = 0;
  const QuadNumber half{Rational(1, 2)};
  while (out.size() < count && extremes >= 2) {
    const auto& a = out[left % extremes];
    const auto& b = out[(left + 1) % extremes];
    CaratheodoryPrefix<QuadNumber> mid;
    mid.c1 = (a.c1 + b.c1) * half;
    mid.c2 = (a.c2 + b.c2) * half;
    mid.c3 = (a.c3 + b.c3) * half;
    out.push_back(mid);
    ++left;
  }
  return out;
}

}  // namespace kfib
