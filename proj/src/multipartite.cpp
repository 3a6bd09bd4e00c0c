#include "sgkit/multipartite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sgkit/bipartite.hpp"

namespace sgkit {

int Selection::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

void validate_selection(const Partition& p, const Selection& sel) {
  if (sel.counts.size() != p.parts().size()) {
    throw std::invalid_argument("selection has " + std::to_string(sel.counts.size()) +
                                " counts for " + std::to_string(p.part_count()) + " parts");
  }
  for (std::size_t i = 0; i < sel.counts.size(); ++i) {
    if (sel.counts[i] < 0 || sel.counts[i] > p.parts()[i]) {
      throw std::invalid_argument("selection count out of range for part " + std::to_string(i));
    }
  }
}

bool is_normal_form(const Partition& p, const Selection& sel) {
  validate_selection(p, sel);
  int partial = 0;
  for (std::size_t i = 0; i < sel.counts.size(); ++i) {
    partial += (sel.counts[i] > 0 && sel.counts[i] < p.parts()[i]);
  }
  return partial <= 2;
}

bool coverage_feasible(const Partition& p, const Selection& sel) {
  validate_selection(p, sel);
  const auto& n = p.parts();
  const auto& s = sel.counts;
  if (n.size() == 1) return s[0] == n[0];
  Count pairs = 0;
  Count uncovered = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    pairs += binom2(s[i]);
    uncovered += n[i] - s[i];
  }
  if (uncovered > pairs) return false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    // A part's own pairs cannot reach its own vertices.
    if (n[i] - s[i] > pairs - binom2(s[i])) return false;
  }
  return true;
}

namespace {

struct PairSlot {
  int part;
  Vertex x;
  Vertex y;
};

// Uncovered vertices on the left, usable same-part pairs on the right; a pair
// may serve any vertex outside its own part. Returns, per uncovered vertex, the
// index of its matched pair or -1.
struct CoverMatching {
  std::vector<Vertex> uncovered;
  std::vector<int> uncovered_part;
  std::vector<PairSlot> pairs;
  std::vector<int> match_of_vertex;
  int matched = 0;
};

CoverMatching build_cover_matching(const Partition& p, const Selection& sel) {
  validate_selection(p, sel);
  const auto starts = p.block_starts();
  const auto& n = p.parts();
  CoverMatching cm;
  for (int q = 0; q < p.part_count(); ++q) {
    for (int j = sel.counts[q]; j < n[q]; ++j) {
      cm.uncovered.push_back(starts[q] + j);
      cm.uncovered_part.push_back(q);
    }
  }
  // No matching ever needs more pairs from one part than there are uncovered vertices.
  const std::size_t per_part_cap = cm.uncovered.size();
  for (int q = 0; q < p.part_count(); ++q) {
    std::size_t taken = 0;
    for (int a = 0; a < sel.counts[q] && taken < per_part_cap; ++a) {
      for (int b = a + 1; b < sel.counts[q] && taken < per_part_cap; ++b) {
        cm.pairs.push_back({q, starts[q] + a, starts[q] + b});
        ++taken;
      }
    }
  }

  std::vector<int> owner(cm.pairs.size(), -1);  // pair -> uncovered index
  cm.match_of_vertex.assign(cm.uncovered.size(), -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (std::size_t r = 0; r < cm.pairs.size(); ++r) {
      if (cm.pairs[r].part == cm.uncovered_part[u] || visited[r]) continue;
      visited[r] = 1;
      if (owner[r] == -1 || augment(owner[r])) {
        owner[r] = u;
        cm.match_of_vertex[u] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < cm.uncovered.size(); ++u) {
    visited.assign(cm.pairs.size(), 0);
    if (augment(static_cast<int>(u))) ++cm.matched;
  }
  return cm;
}

}  // namespace

bool coverage_feasible_matching(const Partition& p, const Selection& sel) {
  validate_selection(p, sel);
  if (p.part_count() == 1) return sel.counts[0] == p.parts()[0];
  const auto cm = build_cover_matching(p, sel);
  return cm.matched == static_cast<int>(cm.uncovered.size());
}

std::vector<Vertex> selection_vertices(const Partition& p, const Selection& sel) {
  validate_selection(p, sel);
  const auto starts = p.block_starts();
  std::vector<Vertex> out;
  for (int q = 0; q < p.part_count(); ++q) {
    for (int j = 0; j < sel.counts[q]; ++j) out.push_back(starts[q] + j);
  }
  return out;
}

Certificate selection_certificate(const Partition& p, const Selection& sel) {
  if (!coverage_feasible_matching(p, sel)) {
    throw std::invalid_argument("selection does not form a strong geodetic set");
  }
  Certificate cert;
  cert.set = selection_vertices(p, sel);
  if (p.part_count() == 1) return cert;  // edgeless: S = V, no pairs are connected

  const auto cm = build_cover_matching(p, sel);
  const auto part = p.part_of_vertices();
  const auto starts = p.block_starts();
  std::map<VertexPair, Vertex> middle;
  for (std::size_t u = 0; u < cm.uncovered.size(); ++u) {
    const auto& slot = cm.pairs[cm.match_of_vertex[u]];
    middle[{slot.x, slot.y}] = cm.uncovered[u];
  }
  for (std::size_t a = 0; a < cert.set.size(); ++a) {
    for (std::size_t b = a + 1; b < cert.set.size(); ++b) {
      const Vertex x = cert.set[a];
      const Vertex y = cert.set[b];
      if (part[x] != part[y]) {
        cert.chosen[{x, y}] = Geodesic{{x, y}};
        continue;
      }
      Vertex via;
      if (auto it = middle.find({x, y}); it != middle.end()) {
        via = it->second;
      } else {
        via = starts[part[x] == 0 ? 1 : 0];  // any vertex of another part
      }
      cert.chosen[{x, y}] = Geodesic{{x, via, y}};
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

using Multiplicities = std::vector<std::pair<int, int>>;  // (size, count), largest first

std::uint64_t whole_configuration_count(const Multiplicities& mult) {
  std::uint64_t total = 1;
  for (const auto& [size, count] : mult) {
    total *= static_cast<std::uint64_t>(count) + 1;
    if (total > kMultipartiteConfigBudget) return total;
  }
  return total;
}

// Visits every vector w with 0 <= w[j] <= count_j.
template <class Visit>
void for_each_whole_vector(const Multiplicities& mult, Visit&& visit) {
  std::vector<int> w(mult.size(), 0);
  while (true) {
    visit(w);
    std::size_t j = 0;
    while (j < w.size() && w[j] == mult[j].second) w[j++] = 0;
    if (j == w.size()) return;
    ++w[j];
  }
}

struct Partial {
  int block;     // index into multiplicities
  int selected;  // 0 < selected < size
};

// Aggregated counting criterion for r >= 2.
bool configuration_feasible(const Multiplicities& mult, const std::vector<int>& whole,
                            const std::vector<Partial>& partials) {
  Count pairs = 0;
  Count uncovered = 0;
  Count worst = 0;  // max over parts of U_p + C(s_p,2)
  std::vector<int> empty(mult.size());
  for (std::size_t j = 0; j < mult.size(); ++j) empty[j] = mult[j].second - whole[j];
  for (const auto& pt : partials) --empty[pt.block];
  for (std::size_t j = 0; j < mult.size(); ++j) {
    const int size = mult[j].first;
    pairs += whole[j] * binom2(size);
    if (whole[j] > 0) worst = std::max(worst, binom2(size));
    uncovered += static_cast<Count>(empty[j]) * size;
    if (empty[j] > 0) worst = std::max<Count>(worst, size);
  }
  for (const auto& pt : partials) {
    const int size = mult[pt.block].first;
    pairs += binom2(pt.selected);
    uncovered += size - pt.selected;
    worst = std::max(worst, size - pt.selected + binom2(pt.selected));
  }
  return uncovered <= pairs && worst <= pairs;
}

Selection expand_configuration(const Multiplicities& mult, const std::vector<int>& whole,
                               const std::vector<Partial>& partials) {
  Selection sel;
  for (std::size_t j = 0; j < mult.size(); ++j) {
    std::vector<int> block(static_cast<std::size_t>(whole[j]), mult[j].first);
    for (const auto& pt : partials) {
      if (pt.block == static_cast<int>(j)) block.push_back(pt.selected);
    }
    std::sort(block.begin(), block.end(), std::greater<>());
    block.resize(static_cast<std::size_t>(mult[j].second), 0);
    sel.counts.insert(sel.counts.end(), block.begin(), block.end());
  }
  return sel;
}

}  // namespace

MultipartiteResult sg_multipartite(const Partition& p) {
  MultipartiteResult best;
  if (p.part_count() == 1) {
    best.k = p.parts()[0];
    best.selection.counts = {p.parts()[0]};
    best.configurations = 1;
    return best;
  }
  const auto mult = p.multiplicities();
  if (whole_configuration_count(mult) > kMultipartiteConfigBudget) {
    throw ResourceLimitError("partition " + p.to_string() + " exceeds the configuration budget");
  }

  best.k = p.vertex_count() + 1;
  auto consider = [&](const std::vector<int>& whole, const std::vector<Partial>& partials) {
    ++best.configurations;
    if (!configuration_feasible(mult, whole, partials)) return;
    int k = 0;
    for (std::size_t j = 0; j < mult.size(); ++j) k += whole[j] * mult[j].first;
    for (const auto& pt : partials) k += pt.selected;
    if (k > best.k) return;
    Selection sel = expand_configuration(mult, whole, partials);
    if (k < best.k || sel < best.selection) {
      best.k = k;
      best.selection = std::move(sel);
    }
  };

  const int blocks = static_cast<int>(mult.size());
  for_each_whole_vector(mult, [&](const std::vector<int>& whole) {
    auto free_in = [&](int j) { return mult[j].second - whole[j]; };
    consider(whole, {});
    for (int a = 0; a < blocks; ++a) {
      if (free_in(a) < 1) continue;
      for (int sa = 1; sa < mult[a].first; ++sa) {
        consider(whole, {{a, sa}});
        for (int b = a; b < blocks; ++b) {
          if (free_in(b) < (a == b ? 2 : 1)) continue;
          // Equal blocks: sb <= sa avoids listing the same pair twice.
          const int top = a == b ? sa : mult[b].first - 1;
          for (int sb = 1; sb <= top; ++sb) consider(whole, {{a, sa}, {b, sb}});
        }
      }
    }
  });
  return best;
}

int sg_multipartite_direct(const Partition& p) {
  const int r = p.part_count();
  const auto& n = p.parts();
  if (r == 1) return n[0];
  if (r > 16) throw ResourceLimitError("direct enumeration is limited to 16 parts");
  int best = p.vertex_count();
  Selection sel;
  sel.counts.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::vector<int> others;
      for (int q = 0; q < r; ++q) {
        if (q != i && q != j) others.push_back(q);
      }
      for (std::uint32_t subset = 0; subset < (1u << others.size()); ++subset) {
        int whole = 0;
        for (std::size_t b = 0; b < others.size(); ++b) {
          const bool in = (subset >> b) & 1;
          sel.counts[others[b]] = in ? n[others[b]] : 0;
          whole += in ? n[others[b]] : 0;
        }
        for (int si = 0; si <= n[i]; ++si) {
          for (int sj = 0; sj <= n[j]; ++sj) {
            if (whole + si + sj >= best) continue;
            sel.counts[i] = si;
            sel.counts[j] = sj;
            if (coverage_feasible(p, sel)) best = whole + si + sj;
          }
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

// m_j for j = 0..k (index 0 unused).
std::vector<Count> size_counts(const Partition& p) {
  std::vector<Count> m(static_cast<std::size_t>(p.largest()) + 1, 0);
  for (int s : p.parts()) ++m[s];
  return m;
}

bool level_holds(const std::vector<Count>& m, int l, LevelRule rule, Count n) {
  const int k = static_cast<int>(m.size()) - 1;
  if (rule == LevelRule::covering_capacity) {
    Count capacity = 0;
    for (int j = l + 1; j <= k; ++j) capacity += binom2(j + 1) * m[j];
    return capacity <= n;
  }
  Count low = 0;
  Count high = 0;
  for (int j = 1; j <= l; ++j) low += j * m[j];
  for (int j = l + 1; j <= k; ++j) high += binom2(j) * m[j];
  return low >= high;
}

}  // namespace

int relaxation_level(const Partition& p, LevelRule rule) {
  const auto m = size_counts(p);
  const Count n = p.vertex_count();
  int l = p.largest();
  while (l > 1 && level_holds(m, l - 1, rule, n)) --l;
  return l;
}

RelaxationBound lp_lower_bound(const Partition& p) {
  const auto m = size_counts(p);
  const int k = p.largest();
  const int l = relaxation_level(p);

  // Parts above l are taken whole; the level-l parts absorb the remaining demand
  // at 2/(l+1) selected vertices per covered vertex.
  Count whole = 0;
  Count residual = 0;
  for (int j = l + 1; j <= k; ++j) {
    whole += j * m[j];
    residual -= binom2(j) * m[j];
  }
  for (int j = 1; j <= l; ++j) residual += j * m[j];

  RelaxationBound out;
  out.level = l;
  // a_{l,l} = residual / C(l+1, 2) must lie in [0, m_l].
  if (residual < 0) {
    out.clamped = true;
    residual = 0;
  }
  if (residual > m[l] * binom2(l + 1)) {
    out.clamped = true;
    residual = m[l] * binom2(l + 1);
  }
  const Count numerator = 2 * residual;
  const Count denominator = l + 1;
  out.value = static_cast<int>(whole + (numerator + denominator - 1) / denominator);
  return out;
}

WholePartsBound whole_parts_upper_bound(const Partition& p) {
  WholePartsBound out;
  const auto& n = p.parts();
  if (p.part_count() == 1) {
    out.value = n[0];
    out.selection.counts = {n[0]};
    out.exhaustive = true;
    return out;
  }
  // Greedy: whole parts largest first until the selection covers.
  Selection greedy;
  greedy.counts.assign(n.size(), 0);
  for (std::size_t q = 0; q < n.size(); ++q) {
    greedy.counts[q] = n[q];
    if (coverage_feasible(p, greedy)) break;
  }
  out.value = greedy.total();
  out.selection = greedy;

  const auto mult = p.multiplicities();
  if (whole_configuration_count(mult) > kMultipartiteConfigBudget) return out;
  out.exhaustive = true;
  for_each_whole_vector(mult, [&](const std::vector<int>& whole) {
    int k = 0;
    for (std::size_t j = 0; j < mult.size(); ++j) k += whole[j] * mult[j].first;
    if (k >= out.value) return;
    if (configuration_feasible(mult, whole, {})) {
      out.value = k;
      out.selection = expand_configuration(mult, whole, {});
    }
  });
  return out;
}

int sg_uniform(int part_size, int part_count) {
  if (part_size < 1 || part_count < 1) throw std::invalid_argument("sizes must be positive");
  if ((2 * part_count) % (part_size + 1) != 0) {
    throw std::invalid_argument("closed form needs (k+1) | 2m");
  }
  return 2 * part_count * part_size / (part_size + 1);
}

MultipartiteBounds multipartite_bounds(const Partition& p, bool with_exact) {
  MultipartiteBounds b;
  b.lp_lower = lp_lower_bound(p).value;
  b.whole_parts_upper = whole_parts_upper_bound(p).value;
  if (with_exact) b.exact = sg_multipartite(p).k;
  return b;
}

}  // namespace sgkit
