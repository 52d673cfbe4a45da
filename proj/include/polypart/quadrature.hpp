#ifndef POLYPART_QUADRATURE_HPP
#define POLYPART_QUADRATURE_HPP

#include <array>
#include <functional>

#include "polypart/errors.hpp"

namespace polypart {

// 16-point Gauss-Legendre rule on [-1, 1]
inline constexpr std::array<double, 16> kGL16Nodes = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};

inline constexpr std::array<double, 16> kGL16Weights = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

// composite 16-point rule over [a, b] with `segments` panels
inline double integrate_composite(const std::function<double(double)>& f, double a, double b,
                                  int segments) {
  double total = 0;
  const double h = (b - a) / segments;
  for (int s = 0; s < segments; ++s) {
    const double lo = a + s * h;
    for (int k = 0; k < 16; ++k)
      total += 0.5 * h * kGL16Weights[k] * f(lo + 0.5 * h * (kGL16Nodes[k] + 1.0));
  }
  return total;
}

// panel doubling until the Richardson ratio settles below rel_tol
inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double rel_tol = 1e-8, int max_segments = 4096) {
  double prev = integrate_composite(f, a, b, 4);
  for (int seg = 8; seg <= max_segments; seg *= 2) {
    const double cur = integrate_composite(f, a, b, seg);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-14});
    if (std::abs(cur - prev) / scale < rel_tol) return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("integrate_adaptive: did not reach requested tolerance");
}

}  // namespace polypart

#endif
