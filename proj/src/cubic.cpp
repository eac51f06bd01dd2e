#include "octeig/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace octeig {
namespace {

struct Cubic {
  double c2, c1, c0;
  double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
  double d1(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
  double d2(double x) const { return 6.0 * x + 2.0 * c2; }
};

double polish(const Cubic& f, double x) {
  const double fx = f(x);
  const double dx = f.d1(x);
  if (dx == 0.0) return x;
  const double y = x - fx / dx;
  return std::abs(f(y)) < std::abs(fx) ? y : x;
}

}  // namespace

std::array<double, 3> real_cubic_roots(double c2, double c1, double c0) {
  const Cubic f{c2, c1, c0};
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

  std::array<double, 3> t{};
  if (p >= 0.0) {
    // Three real roots with p >= 0 means a triple root (up to rounding).
    t.fill(std::cbrt(-q));
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      t[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
  }

  std::array<double, 3> x{};
  for (int k = 0; k < 3; ++k) x[k] = polish(f, t[k] - shift);
  std::sort(x.begin(), x.end());

  const double scale = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
  for (int k = 0; k < 2; ++k) {
    if (x[k + 1] - x[k] > 1e-6 * scale) continue;
    // Critical points of f; take the one nearest the pair.
    const double disc = c2 * c2 - 3.0 * c1;
    if (disc < 0.0) continue;
    const double s = std::sqrt(disc);
    const double mid = 0.5 * (x[k] + x[k + 1]);
    const double cp1 = (-c2 - s) / 3.0, cp2 = (-c2 + s) / 3.0;
    const double crit = std::abs(cp1 - mid) < std::abs(cp2 - mid) ? cp1 : cp2;
    const double curv = f.d2(crit);
    double half = 0.0;
    if (curv != 0.0) half = std::sqrt(std::max(0.0, -2.0 * f(crit) / curv));
    x[k] = crit - half;
    x[k + 1] = crit + half;
  }
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace octeig
