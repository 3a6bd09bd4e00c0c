#include "sgkit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgkit {

using Complex = std::complex<long double>;

long double evaluate_polynomial(std::span<const long double> coeffs, long double x) {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Value and derivative by Horner's scheme.
std::pair<Complex, Complex> horner(std::span<const long double> coeffs, Complex z) {
  Complex p = 0;
  Complex dp = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<Complex> aberth(std::span<const long double> coeffs) {
  const int degree = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> z(static_cast<std::size_t>(degree));
  if (degree == 0) return z;

  // Start on a circle whose radius bounds the root moduli (Cauchy bound),
  // rotated off the real axis so conjugate pairs can separate.
  long double radius = 0;
  for (int i = 0; i < degree; ++i) {
    radius = std::max(radius, std::abs(coeffs[i] / coeffs[degree]));
  }
  radius = 1 + radius;
  for (int k = 0; k < degree; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / degree + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 500; ++iter) {
    long double largest_step = 0;
    for (int k = 0; k < degree; ++k) {
      auto [p, dp] = horner(coeffs, z[k]);
      if (p == Complex(0)) continue;
      const Complex ratio = p / dp;
      Complex repulsion = 0;
      for (int j = 0; j < degree; ++j) {
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      }
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (largest_step < 1e-17L) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const long double> coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == 0) --top;
  if (top == 0) throw std::invalid_argument("zero polynomial has no finite root set");
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0) ++zeros;

  std::vector<Complex> roots(zeros, Complex(0));
  auto rest = aberth(coeffs.subspan(zeros, top - zeros));
  roots.insert(roots.end(), rest.begin(), rest.end());
  return roots;
}

long double polish_real_root(std::span<const long double> coeffs, long double x) {
  long double best = x;
  long double best_value = std::abs(evaluate_polynomial(coeffs, x));
  for (int iter = 0; iter < 50 && best_value > 0; ++iter) {
    auto [p, dp] = horner(coeffs, Complex(x));
    if (dp.real() == 0) break;
    x -= p.real() / dp.real();
    const long double value = std::abs(evaluate_polynomial(coeffs, x));
    if (!std::isfinite(x) || value >= best_value) break;
    best = x;
    best_value = value;
  }
  return best;
}

}  // namespace sgkit
