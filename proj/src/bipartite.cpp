#include "sgkit/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sgkit/multipartite.hpp"
#include "sgkit/polynomial.hpp"

namespace sgkit {

namespace {

constexpr Count kMaxSide = 1'000'000'000;
constexpr Count kMaxScan = 1'000'000;

void require_sides(Count n, Count m) {
  if (n < 1 || m < 1) throw std::invalid_argument("part sizes must be positive");
  if (n > kMaxSide || m > kMaxSide) throw std::invalid_argument("part sizes are capped at 1e9");
}

}  // namespace

Count binom2(Count s) {
  if (s < 2) return 0;
  if (s > 4'000'000'000LL) throw std::overflow_error("binom2 argument too large");
  return s * (s - 1) / 2;
}

Count isqrt(Count x) {
  if (x < 0) throw std::invalid_argument("isqrt of a negative number");
  auto r = static_cast<Count>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

Count inv_binom_ceil(Count t) {
  if (t <= 0) return 0;
  // Start from the real root of s(s-1)/2 = t and correct by whole steps.
  Count s = static_cast<Count>(std::ceil((1.0L + std::sqrt(1.0L + 8.0L * t)) / 2.0L));
  while (s > 0 && binom2(s - 1) >= t) --s;
  while (binom2(s) < t) ++s;
  return s;
}

bool bipartite_selection_feasible(Count n, Count m, Count s1, Count s2) {
  return s1 >= 0 && s1 <= n && s2 >= 0 && s2 <= m && binom2(s2) >= n - s1 &&
         binom2(s1) >= m - s2;
}

BipartiteSolution sg_bipartite(Count n, Count m) {
  require_sides(n, m);
  const Count small = std::min(n, m);
  if (small > kMaxScan) {
    if (!large_m_domain(small, std::max(n, m))) {
      throw std::domain_error("both sides exceed 1e6 outside the large-m regime");
    }
    // Take the whole small side; the large side supplies the rest.
    const Count big = std::max(n, m);
    const Count rest = big - binom2(small);
    return n <= m ? BipartiteSolution{n, m, small + rest, small, rest}
                  : BipartiteSolution{n, m, small + rest, rest, small};
  }

  BipartiteSolution best{n, m, std::numeric_limits<Count>::max(), n, m};
  if (n <= m) {
    for (Count s1 = 0; s1 <= n; ++s1) {
      const Count s2 = std::max({inv_binom_ceil(n - s1), m - binom2(s1), Count{0}});
      if (s2 > m) continue;
      if (s1 + s2 < best.k) best = {n, m, s1 + s2, s1, s2};
    }
  } else {
    for (Count s2 = 0; s2 <= m; ++s2) {
      const Count s1 = std::max({inv_binom_ceil(m - s2), n - binom2(s2), Count{0}});
      if (s1 > n) continue;
      if (s1 + s2 < best.k || (s1 + s2 == best.k && s1 < best.s1)) best = {n, m, s1 + s2, s1, s2};
    }
  }
  return best;
}

bool balanced_uses_square_branch(Count n) {
  const Count x = 8 * n - 7;
  const Count r = isqrt(x);
  return r * r == x;
}

Count sg_balanced(Count n) {
  if (n < 6) throw std::invalid_argument("balanced closed form needs n >= 6");
  if (n > kMaxSide) throw std::invalid_argument("part sizes are capped at 1e9");
  // ceil((-1 + sqrt(8n+1)) / 2) is the least q with (2q+1)^2 >= 8n+1.
  const Count x = 8 * n + 1;
  Count q = (isqrt(x) - 1) / 2;
  while ((2 * q + 1) * (2 * q + 1) < x) ++q;
  return 2 * q - (balanced_uses_square_branch(n) ? 1 : 0);
}

Count level_boundary(Count k, Count beta) {
  return k - 1 + binom2(std::max(beta - 1, Count{2}));
}

bool classify_sg_eq_k(Count n, Count m, Count k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("arguments must be positive");
  if (n == 1 && m == 1) return k == 2;
  if (n == 2 && m == 2) return k == 3;
  const auto f = [k](Count beta) { return level_boundary(k, beta); };
  if (n < k && m == f(n)) return true;
  if (m < k && n == f(m)) return true;
  for (Count i = 0; i <= k; ++i) {
    if (f(i - 1) <= m && m <= f(i) && f(k - i - 1) <= n && n <= f(k - i)) return true;
  }
  return false;
}

bool large_m_domain(Count n, Count m) {
  if (n < 1 || m < 1) return false;
  return (n >= 3 && m > binom2(n)) || (n <= 3 && m > n);
}

Count sg_large_m(Count n, Count m) {
  if (!large_m_domain(n, m)) {
    throw std::invalid_argument("need n >= 3 and m > C(n,2), or n <= 3 and m > n");
  }
  if (n >= 3 && m > binom2(n)) return m + 1 - binom2(n - 1);
  return m;
}

Count level_set_extent(Count k) { return level_boundary(k, k) + k; }

std::vector<std::pair<Count, Count>> level_set(Count k) {
  if (k < 2) throw std::invalid_argument("level sets start at k = 2");
  const Count extent = level_set_extent(k);
  std::vector<std::pair<Count, Count>> out;
  for (Count n = 1; n <= extent; ++n) {
    for (Count m = 1; m <= extent; ++m) {
      if (sg_bipartite(n, m).k == k) out.emplace_back(n, m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void validate(const RegimeSpec& s) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  switch (s.regime) {
    case Regime::superquadratic:
      if (!(s.beta > 2 && s.alpha > 0)) fail("superquadratic regime needs beta > 2, alpha > 0");
      break;
    case Regime::quadratic_high:
      if (!(s.beta == 2 && s.alpha > 0.5)) fail("quadratic regime needs beta = 2, alpha > 1/2");
      break;
    case Regime::half_square_high:
      if (!(s.beta == 2 && s.alpha == 0.5 && s.gamma > -0.5)) {
        fail("half-square regime needs alpha = 1/2, beta = 2, gamma > -1/2");
      }
      break;
    case Regime::half_square_low:
      if (!(s.beta == 2 && s.alpha == 0.5 && s.gamma <= -0.5)) {
        fail("half-square regime needs alpha = 1/2, beta = 2, gamma <= -1/2");
      }
      break;
    case Regime::quadratic_low:
      if (!(s.beta == 2 && s.alpha > 0 && s.alpha < 0.5)) {
        fail("quadratic regime needs beta = 2, 0 < alpha < 1/2");
      }
      break;
    case Regime::subquadratic:
      if (!(s.beta > 1 && s.beta < 2 && s.alpha > 0)) {
        fail("subquadratic regime needs 1 < beta < 2, alpha > 0");
      }
      break;
    case Regime::linear:
      if (!(s.beta == 1 && s.alpha >= 1)) fail("linear regime needs beta = 1, alpha >= 1");
      break;
    default:
      fail("unknown regime");
  }
}

double asymptotic_estimate(const RegimeSpec& s, double n) {
  validate(s);
  switch (s.regime) {
    case Regime::superquadratic: return s.alpha * std::pow(n, s.beta);
    case Regime::quadratic_high: return (s.alpha - 0.5) * n * n;
    case Regime::half_square_high: return (s.gamma + 1.5) * n;
    case Regime::half_square_low: return n;
    case Regime::quadratic_low: return std::sqrt(2 * s.alpha) * n;
    case Regime::subquadratic: return std::sqrt(2 * s.alpha) * std::pow(n, s.beta / 2);
    case Regime::linear: return std::sqrt(2.0) * (1 + std::sqrt(s.alpha)) * std::sqrt(n);
  }
  return 0;
}

Count regime_m(const RegimeSpec& s, Count n) {
  validate(s);
  const long double nn = static_cast<long double>(n);
  const long double m = s.alpha * std::pow(nn, s.beta) + s.gamma * std::pow(nn, s.beta - 1);
  return static_cast<Count>(std::llround(m));
}

// ---------------------------------------------------------------------------

std::array<long double, 5> quartic_coefficients(Count n, Count m) {
  const long double d = static_cast<long double>(m - n);
  return {4 * d * d, 0, 15 - 4 * static_cast<long double>(m + n), 8, 1};
}

namespace {

long double half_binom(long double x) { return x * (x - 1) / 2; }  // C(x,2) for real x

// Recovers i for a root k: from the difference of the equations when k - 3 is
// not tiny, otherwise from the m-equation alone (both branches tried).
bool back_substitute(Count n, Count m, long double k, QuarticRoot& out) {
  const long double t = k - 3;
  const long double d = static_cast<long double>(m - n);
  std::vector<long double> candidates;
  if (std::abs(t) > 1e-3L) {
    candidates.push_back((t + 1) / 2 + d / t + 1);  // i = a + 1
  } else {
    const long double disc = 1 + 8 * (static_cast<long double>(m) - k + 1);
    if (disc < 0) return false;
    candidates.push_back((3 + std::sqrt(disc)) / 2);
    candidates.push_back((3 - std::sqrt(disc)) / 2);
  }
  bool found = false;
  for (long double i : candidates) {
    const long double rm = std::abs(m - (k - 1 + half_binom(i - 1)));
    const long double rn = std::abs(n - (k - 1 + half_binom(k - i - 1)));
    if (!found || std::max(rm, rn) < std::max<double>(out.residual_m, out.residual_n)) {
      out = QuarticRoot{static_cast<double>(k), static_cast<double>(i), static_cast<double>(rm),
                        static_cast<double>(rn)};
      found = true;
    }
  }
  return found;
}

}  // namespace

std::vector<QuarticRoot> quartic_roots(Count n, Count m) {
  if (n < 2 || m < 2) throw std::invalid_argument("quartic harness needs n, m >= 2");
  const auto coeffs = quartic_coefficients(n, m);
  const auto roots = polynomial_roots(coeffs);
  std::vector<QuarticRoot> out;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) > 1e-6L * (1 + std::abs(z))) continue;
    const long double t = polish_real_root(coeffs, z.real());
    QuarticRoot root;
    if (!back_substitute(n, m, t + 3, root)) continue;
    if (root.residual_m > kRootResidualTolerance || root.residual_n > kRootResidualTolerance) {
      continue;
    }
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const QuarticRoot& r) {
      return std::abs(r.k - root.k) <= 1e-9 * (1 + std::abs(root.k));
    });
    if (!duplicate) out.push_back(root);
  }
  std::sort(out.begin(), out.end(),
            [](const QuarticRoot& a, const QuarticRoot& b) { return a.k < b.k; });
  return out;
}

ConjectureSample conjecture_sample(Count n, Count m) {
  ConjectureSample s;
  s.n = n;
  s.m = m;
  s.sg = sg_bipartite(n, m).k;
  for (const auto& r : quartic_roots(n, m)) {
    s.roots.push_back(r.k);
    s.e = std::min(s.e, std::abs(static_cast<double>(s.sg) - r.k));
  }
  return s;
}

namespace {

ConjectureScan scan_range(Count n, Count lo, Count hi) {
  ConjectureScan part;
  part.n = n;
  for (Count m = lo; m <= hi; ++m) {
    const auto s = conjecture_sample(n, m);
    ++part.samples;
    if (!std::isfinite(s.e)) {
      ++part.rootless_m;
      continue;
    }
    if (part.argmax_m == 0 || s.e > part.max_e) {
      part.max_e = s.e;
      part.argmax_m = m;
    }
  }
  return part;
}

}  // namespace

ConjectureScan conjecture_scan(Count n, unsigned threads) {
  if (n < 4) throw std::invalid_argument("conjecture scan needs n >= 4");
  const Count lo = n;
  const Count hi = binom2(n);
  threads = std::max(1u, threads);
  const Count span = hi - lo + 1;
  const Count chunks = std::min<Count>(threads, span);

  std::vector<ConjectureScan> parts(static_cast<std::size_t>(chunks));
  std::vector<std::thread> workers;
  for (Count c = 0; c < chunks; ++c) {
    const Count a = lo + span * c / chunks;
    const Count b = lo + span * (c + 1) / chunks - 1;
    if (chunks == 1) {
      parts[c] = scan_range(n, a, b);
    } else {
      workers.emplace_back([&parts, c, n, a, b] { parts[c] = scan_range(n, a, b); });
    }
  }
  for (auto& w : workers) w.join();

  // Chunks are in ascending m, so a strict comparison keeps the smallest arg-max.
  ConjectureScan total;
  total.n = n;
  for (const auto& p : parts) {
    total.samples += p.samples;
    total.rootless_m += p.rootless_m;
    if (p.argmax_m != 0 && (total.argmax_m == 0 || p.max_e > total.max_e)) {
      total.max_e = p.max_e;
      total.argmax_m = p.argmax_m;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

Certificate bipartite_certificate(const BipartiteSolution& sol) {
  const Partition partition({static_cast<int>(sol.n), static_cast<int>(sol.m)});
  // The canonical layout puts the larger side first.
  const bool n_first = sol.n >= sol.m;
  Selection selection{n_first ? std::vector<int>{static_cast<int>(sol.s1), static_cast<int>(sol.s2)}
                              : std::vector<int>{static_cast<int>(sol.s2), static_cast<int>(sol.s1)}};
  return selection_certificate(partition, selection);
}

}  // namespace sgkit
