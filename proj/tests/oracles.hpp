#pragma once

// Reference computations written straight from the definitions. They share
// no code with the library beyond the model type.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace oracle {

inline int psi(const ohg::Hyperedge& h, int v) {
  for (const auto& inc : h.members()) {
    if (inc.vertex == v) return ohg::to_int(inc.sign);
  }
  return 0;
}

/// A_ij = -sum_h psi(i,h) psi(j,h) for i != j.
inline Eigen::MatrixXd adjacency(const ohg::OrientedHypergraph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& h : g.edges()) a(i, j) -= psi(h, i) * psi(h, j);
    }
  }
  return a;
}

inline Eigen::VectorXd degrees(const ohg::OrientedHypergraph& g) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(g.vertex_count());
  for (const auto& h : g.edges()) {
    for (const auto& inc : h.members()) d(inc.vertex) += 1;
  }
  return d;
}

inline Eigen::MatrixXd laplacian(const ohg::OrientedHypergraph& g) {
  const int n = g.vertex_count();
  return Eigen::MatrixXd::Identity(n, n) - degrees(g).cwiseInverse().asDiagonal() * adjacency(g);
}

/// Spectrum by a library solver on the symmetrized matrix.
inline Eigen::VectorXd eigenvalues(const ohg::OrientedHypergraph& g) {
  const Eigen::VectorXd s = degrees(g).cwiseSqrt();
  const Eigen::MatrixXd sym = s.asDiagonal() * laplacian(g) * s.cwiseInverse().asDiagonal();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(0.5 * (sym + sym.transpose())).eigenvalues();
}

/// Characteristic polynomial coefficients c_0..c_n of det(x I - M) by
/// Faddeev-LeVerrier (c_n = 1).
inline std::vector<double> charpoly(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * Eigen::MatrixXd::Identity(n, n);
    c[n - k] = -(m * mk).trace() / k;
  }
  return c;
}

/// Coefficients of prod (x - r_i), same layout as charpoly.
inline std::vector<double> poly_from_roots(const Eigen::VectorXd& roots) {
  std::vector<double> c{1.0};
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= roots(i) * c[k];
    }
    c = next;
  }
  return c;
}

// ------------------------------------------------------- closed forms

inline std::vector<double> path_spectrum(int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(1.0 - std::cos(std::numbers::pi * k / (n - 1)));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> cycle_spectrum(int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(1.0 - std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> complete_spectrum(int n) {
  std::vector<double> v(n, static_cast<double>(n) / (n - 1));
  v[0] = 0.0;
  return v;
}

// ------------------------------------------------------- invariants

inline bool co_contained(const ohg::OrientedHypergraph& g, int i, int j) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& h) { return h.contains(i) && h.contains(j); });
}

inline int max_subset(int n, const std::function<bool(std::uint64_t)>& ok) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size > best && ok(s)) best = size;
  }
  return best;
}

inline int alpha(const ohg::OrientedHypergraph& g) {
  return max_subset(g.vertex_count(), [&](std::uint64_t s) {
    for (const auto& h : g.edges()) {
      int hit = 0;
      for (const auto& inc : h.members()) hit += (s >> inc.vertex) & 1U;
      if (hit > 1) return false;
    }
    return true;
  });
}

inline int alpha_w(const ohg::OrientedHypergraph& g) {
  const Eigen::MatrixXd a = adjacency(g);
  return max_subset(g.vertex_count(), [&](std::uint64_t s) {
    for (int i = 0; i < g.vertex_count(); ++i) {
      for (int j = i + 1; j < g.vertex_count(); ++j) {
        if (((s >> i) & 1U) && ((s >> j) & 1U) && a(i, j) != 0.0) return false;
      }
    }
    return true;
  });
}

inline int omega(const ohg::OrientedHypergraph& g) {
  return max_subset(g.vertex_count(), [&](std::uint64_t s) {
    for (int i = 0; i < g.vertex_count(); ++i) {
      for (int j = i + 1; j < g.vertex_count(); ++j) {
        if (((s >> i) & 1U) && ((s >> j) & 1U) && !co_contained(g, i, j)) return false;
      }
    }
    return true;
  });
}

/// Fewest colours by backtracking over vertex order, trying k = 1, 2, ...
inline int chi(const ohg::OrientedHypergraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> place = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (int u = 0; u < v && !clash; ++u) clash = color[u] == c && co_contained(g, u, v);
      if (clash) continue;
      color[v] = c;
      if (place(v + 1, k)) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int k = 1;; ++k) {
    if (place(0, k)) return k;
  }
}

// ------------------------------------------------------- partitions

/// Extreme eigenvalues of the Laplacian of Γ|_S, built from the definition
/// of the restricted hypergraph.
inline std::pair<double, double> restricted_extremes(const ohg::OrientedHypergraph& g, std::uint64_t s) {
  std::vector<int> vertices;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((s >> v) & 1U) vertices.push_back(v);
  }
  std::vector<ohg::Hyperedge> edges;
  for (const auto& h : g.edges()) {
    std::vector<ohg::Incidence> kept;
    for (const auto& inc : h.members()) {
      auto it = std::find(vertices.begin(), vertices.end(), inc.vertex);
      if (it != vertices.end()) kept.push_back({static_cast<int>(it - vertices.begin()), inc.sign});
    }
    if (!kept.empty()) edges.emplace_back(std::move(kept));
  }
  const ohg::OrientedHypergraph sub(static_cast<int>(vertices.size()), std::move(edges));
  const auto ev = eigenvalues(sub);
  return {ev(0), ev(ev.size() - 1)};
}

/// Minimum number of parts, each satisfying `lo >= lambda` (geq) or
/// `hi <= lambda` (leq), found by recursive set-partition enumeration.
inline int partition_number(const ohg::OrientedHypergraph& g, double lambda, bool geq, double eps = 1e-9) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> blocks;
  int best = n + 1;
  auto ok = [&](std::uint64_t s) {
    const auto [lo, hi] = restricted_extremes(g, s);
    return geq ? lo >= lambda - eps : hi <= lambda + eps;
  };
  std::function<void(int)> assign = [&](int v) {
    if (static_cast<int>(blocks.size()) >= best) return;
    if (v == n) {
      if (std::all_of(blocks.begin(), blocks.end(), ok)) best = static_cast<int>(blocks.size());
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= std::uint64_t{1} << v;
      assign(v + 1);
      blocks[b] &= ~(std::uint64_t{1} << v);
    }
    blocks.push_back(std::uint64_t{1} << v);
    assign(v + 1);
    blocks.pop_back();
  };
  assign(0);
  return best;
}

}  // namespace oracle
