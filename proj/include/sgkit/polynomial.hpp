#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sgkit {

/// All complex roots of sum coeffs[i] x^i (coefficients lowest degree first,
/// leading coefficient nonzero) by Aberth-Ehrlich simultaneous iteration.
/// Exact zero roots are split off first, so a polynomial with a vanishing
/// constant term keeps full accuracy on its remaining roots.
std::vector<std::complex<long double>> polynomial_roots(std::span<const long double> coeffs);

long double evaluate_polynomial(std::span<const long double> coeffs, long double x);

/// Newton refinement of a real root estimate; returns the input if Newton diverges.
long double polish_real_root(std::span<const long double> coeffs, long double x);

}  // namespace sgkit
