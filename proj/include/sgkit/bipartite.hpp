#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit {

using Count = std::int64_t;

/// Optimal selection counts for K_{n,m}: s1 vertices from the n-side, s2 from the m-side.
struct BipartiteSolution {
  Count n = 0;
  Count m = 0;
  Count k = 0;
  Count s1 = 0;
  Count s2 = 0;

  friend bool operator==(const BipartiteSolution&, const BipartiteSolution&) = default;
};

/// s(s-1)/2 with an overflow check; zero for s < 2.
Count binom2(Count s);

/// Smallest s >= 0 with binom2(s) >= t.
Count inv_binom_ceil(Count t);

/// True when (s1, s2) satisfies both covering constraints of K_{n,m}.
bool bipartite_selection_feasible(Count n, Count m, Count s1, Count s2);

/// Exact minimum of s1 + s2 over feasible selections, by a scan over the smaller
/// side (ties go to the smallest s1). Sides up to 1e9 are accepted; when the
/// smaller side exceeds 1e6 only the large-m regime is answered.
BipartiteSolution sg_bipartite(Count n, Count m);

/// Closed form for sg(K_{n,n}), n >= 6, in integer arithmetic.
Count sg_balanced(Count n);
bool balanced_uses_square_branch(Count n);  // 8n - 7 is a perfect square

Count isqrt(Count x);

/// k - 1 + C(max(beta - 1, 2), 2): the boundary values in the sg = k classification.
Count level_boundary(Count k, Count beta);

/// Literal evaluation of the three-clause characterization of sg(K_{n,m}) = k,
/// with the exceptional pairs (1,1) and (2,2) handled separately.
bool classify_sg_eq_k(Count n, Count m, Count k);

bool large_m_domain(Count n, Count m);
/// m + 1 - C(n-1, 2) for n >= 3, m > C(n,2); m for n <= 3, m > n.
Count sg_large_m(Count n, Count m);

/// All (n, m) with sg(K_{n,m}) = k, sorted by n then m.
std::vector<std::pair<Count, Count>> level_set(Count k);
/// Both coordinates of every level_set(k) pair lie in [1, level_set_extent(k)].
Count level_set_extent(Count k);

// --- asymptotics -----------------------------------------------------------

enum class Regime {
  superquadratic = 1,    // m = a n^b, b > 2
  quadratic_high,        // m = a n^2, a > 1/2
  half_square_high,      // m = n^2/2 + c n, c > -1/2
  half_square_low,       // m = n^2/2 + c n, c <= -1/2
  quadratic_low,         // m = a n^2, 0 < a < 1/2
  subquadratic,          // m = a n^b, 1 < b < 2
  linear,                // m = a n, a >= 1
};

struct RegimeSpec {
  Regime regime = Regime::linear;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
};

/// Throws std::invalid_argument when the parameters fall outside the regime.
void validate(const RegimeSpec& spec);

/// Leading-order growth of sg(K_{n,m}) for m following the regime.
double asymptotic_estimate(const RegimeSpec& spec, double n);

/// round(alpha n^beta + gamma n^(beta-1)).
Count regime_m(const RegimeSpec& spec, Count n);

// --- quartic harness -------------------------------------------------------

/// Coefficients (lowest degree first) of the quartic in t = k - 3 obtained by
/// eliminating i from m = k-1+C(i-1,2), n = k-1+C(k-i-1,2):
///   t^4 + 8 t^3 + (15 - 4(m+n)) t^2 + 4 (m-n)^2.
std::array<long double, 5> quartic_coefficients(Count n, Count m);

struct QuarticRoot {
  double k = 0;
  double i = 0;
  double residual_m = 0;  // |m - (k-1+C(i-1,2))|
  double residual_n = 0;  // |n - (k-1+C(k-i-1,2))|
};

inline constexpr double kRootResidualTolerance = 1e-6;

/// Real solutions (k, i) of the two-equation system, ascending in k.
std::vector<QuarticRoot> quartic_roots(Count n, Count m);

struct ConjectureSample {
  Count n = 0;
  Count m = 0;
  Count sg = 0;
  std::vector<double> roots;
  double e = std::numeric_limits<double>::infinity();  // +inf when there is no real root
};

ConjectureSample conjecture_sample(Count n, Count m);

struct ConjectureScan {
  Count n = 0;
  double max_e = 0;        // over m with at least one real root
  Count argmax_m = 0;      // smallest m attaining max_e
  Count rootless_m = 0;    // number of m without a real root
  Count samples = 0;
};

/// max e(m, n) over n <= m <= C(n,2); n >= 4. Splits the m range across
/// `threads` workers; the result does not depend on the thread count.
ConjectureScan conjecture_scan(Count n, unsigned threads = 1);

// --- certificates ----------------------------------------------------------

/// Explicit strong geodetic set of K_{n,m} realizing `solution`. Vertex layout is
/// that of build_complete_multipartite(Partition({n, m})).
Certificate bipartite_certificate(const BipartiteSolution& solution);

}  // namespace sgkit
