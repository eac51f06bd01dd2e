#pragma once

#include <array>

namespace octeig {

/// Real roots, ascending, of x^3 + c2 x^2 + c1 x + c0 when all three roots are
/// known to be real. Uses the trigonometric form of the depressed cubic with a
/// Newton polish; near-double roots are re-derived from the critical point so
/// that an exact double root is not split by ~sqrt(eps).
std::array<double, 3> real_cubic_roots(double c2, double c1, double c0);

}  // namespace octeig
