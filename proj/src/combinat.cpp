#include "ohg/combinat.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ohg/spectral.hpp"

namespace ohg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// Colour classes of a sequential greedy colouring of `p`; an upper bound
// on the clique number of the subgraph induced by p.
int greedy_color_bound(const PairGraph& g, Mask p) {
  int colors = 0;
  while (p != 0) {
    ++colors;
    Mask avail = p;
    while (avail != 0) {
      const int v = std::countr_zero(avail);
      avail &= ~bit(v) & ~g.neighbours(v);
      p &= ~bit(v);
    }
  }
  return colors;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const PairGraph& g) : g_(g) {}

  SetWitness run() {
    current_.clear();
    best_.clear();
    expand(full_mask(g_.vertex_count()));
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void expand(Mask p) {
    if (p == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + greedy_color_bound(g_, p) <= best_.size()) return;
    while (p != 0) {
      if (current_.size() + std::popcount(p) <= best_.size()) return;
      const int v = std::countr_zero(p);
      p &= ~bit(v);
      current_.push_back(v);
      expand(p & g_.neighbours(v));
      current_.pop_back();
    }
  }

  const PairGraph& g_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// k-colourability by DSATUR branching: always colour the vertex with the
// most distinct neighbour colours, trying at most one fresh colour.
class DsaturSearch {
 public:
  explicit DsaturSearch(const PairGraph& g)
      : g_(g), n_(g.vertex_count()), color_(n_, 0), neighbour_colors_(n_, 0) {}

  bool colorable(int k) {
    std::fill(color_.begin(), color_.end(), 0);
    std::fill(neighbour_colors_.begin(), neighbour_colors_.end(), 0);
    k_ = k;
    return extend(0, 0);
  }

 private:
  bool extend(int colored, int used) {
    if (colored == n_) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      const int sat = std::popcount(neighbour_colors_[v]);
      const int deg = std::popcount(g_.neighbours(v));
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (neighbour_colors_[pick] & bit(c)) continue;
      color_[pick] = c;
      std::vector<std::pair<int, Mask>> saved;
      for (Mask nb = g_.neighbours(pick); nb != 0; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        saved.emplace_back(u, neighbour_colors_[u]);
        neighbour_colors_[u] |= bit(c);
      }
      if (extend(colored + 1, std::max(used, c))) return true;
      for (auto [u, m] : saved) neighbour_colors_[u] = m;
      color_[pick] = 0;
    }
    return false;
  }

  const PairGraph& g_;
  int n_;
  int k_ = 0;
  std::vector<int> color_;
  std::vector<Mask> neighbour_colors_;
};

// Lexicographically first colouring in vertex order with forward checking.
class OrderedColoring {
 public:
  OrderedColoring(const PairGraph& g, int k)
      : g_(g), n_(g.vertex_count()), k_(k), color_(n_, 0), domain_(n_, full_mask(k) << 1) {}

  std::optional<std::vector<int>> run() {
    if (extend(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  bool extend(int v, int used) {
    if (v == n_) return true;
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (!(domain_[v] & bit(c))) continue;
      std::vector<std::pair<int, Mask>> saved;
      bool wiped = false;
      for (Mask nb = g_.neighbours(v) & ~full_mask(v + 1); nb != 0; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        saved.emplace_back(u, domain_[u]);
        domain_[u] &= ~bit(c);
        if (domain_[u] == 0) wiped = true;
      }
      color_[v] = c;
      if (!wiped && extend(v + 1, std::max(used, c))) return true;
      for (auto [u, m] : saved) domain_[u] = m;
      color_[v] = 0;
    }
    return false;
  }

  const PairGraph& g_;
  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<Mask> domain_;
};

}  // namespace

SetWitness max_clique(const PairGraph& g) { return CliqueSearch(g).run(); }

int chromatic_number_dsatur(const PairGraph& g) {
  if (g.vertex_count() == 0) return 0;
  DsaturSearch search(g);
  for (int k = 1;; ++k) {
    if (search.colorable(k)) return k;
  }
}

std::optional<std::vector<int>> first_coloring(const PairGraph& g, int k) {
  if (k < 1 || k > 63) return std::nullopt;
  return OrderedColoring(g, k).run();
}

SetWitness independence_number(const OrientedHypergraph& g) {
  return max_clique(two_section(g).complement());
}

SetWitness weak_independence_number(const OrientedHypergraph& g) {
  return max_clique(nonzero_adjacency(adjacency_matrix(g)).complement());
}

SetWitness clique_number(const OrientedHypergraph& g) { return max_clique(two_section(g)); }

ColoringWitness chromatic_number(const OrientedHypergraph& g) {
  const PairGraph pairs = two_section(g);
  const int k = chromatic_number_dsatur(pairs);
  auto coloring = first_coloring(pairs, k);
  if (!coloring) throw std::logic_error("no colouring with the computed chromatic number");
  return {k, std::move(*coloring)};
}

InvariantSet invariants(const OrientedHypergraph& g) {
  return {independence_number(g), weak_independence_number(g), clique_number(g),
          chromatic_number(g)};
}

// ------------------------------------------------------------------ oracles

SetWitness max_clique_exhaustive(const PairGraph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("exhaustive clique search limited to n <= 24");
  // keep the best by (size desc, lexicographic asc)
  Mask best = 0;
  int best_size = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size < best_size) continue;
    bool clique = true;
    for (Mask r = s; r != 0 && clique; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((s & ~bit(v) & ~g.neighbours(v)) != 0) clique = false;
    }
    if (!clique) continue;
    if (size > best_size || mask_lex_less(s, best)) {
      best = s;
      best_size = size;
    }
  }
  return {best_size, mask_to_vertices(best)};
}

int chromatic_number_subset_dp(const PairGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 20) throw std::invalid_argument("subset DP colouring limited to n <= 20");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> independent(total, 0);
  independent[0] = 1;
  for (std::size_t s = 1; s < total; ++s) {
    const int v = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    independent[s] = independent[rest] && (g.neighbours(v) & rest) == 0;
  }
  std::vector<std::uint8_t> cover(total, std::numeric_limits<std::uint8_t>::max());
  cover[0] = 0;
  for (std::size_t s = 1; s < total; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    // every submask of s containing its lowest vertex
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (independent[part]) cover[s] = std::min<std::uint8_t>(cover[s], cover[s & ~part] + 1);
      if (sub == 0) break;
    }
  }
  return cover[total - 1];
}

int chromatic_number_exhaustive(const PairGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 10) throw std::invalid_argument("exhaustive colouring limited to n <= 10");
  const auto pairs = g.pairs();
  std::vector<int> color(n);
  for (int k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), 0);
    while (true) {
      const bool proper = std::all_of(pairs.begin(), pairs.end(),
                                      [&](auto p) { return color[p.first] != color[p.second]; });
      if (proper) return k;
      int pos = 0;
      while (pos < n && ++color[pos] == k) color[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

// ------------------------------------------------------------ certificates

bool is_independent(const OrientedHypergraph& g, std::span<const int> u) {
  const Mask m = vertices_to_mask(u);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Hyperedge& h) { return std::popcount(h.vertex_mask() & m) <= 1; });
}

bool is_weakly_independent(const Eigen::MatrixXi& adjacency, std::span<const int> u) {
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (adjacency(u[a], u[b]) != 0) return false;
    }
  }
  return true;
}

bool is_clique(const PairGraph& pairs, std::span<const int> u) {
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (u[a] == u[b] || !pairs.has(u[a], u[b])) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const PairGraph& pairs, std::span<const int> coloring, int colors) {
  if (static_cast<int>(coloring.size()) != pairs.vertex_count()) return false;
  std::vector<bool> used(colors + 1, false);
  for (int c : coloring) {
    if (c < 1 || c > colors) return false;
    used[c] = true;
  }
  if (std::count(used.begin() + 1, used.end(), true) != colors) return false;
  for (auto [i, j] : pairs.pairs()) {
    if (coloring[i] == coloring[j]) return false;
  }
  return true;
}

}  // namespace ohg
