#include "ohg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ohg {

Eigen::MatrixXi adjacency_matrix(const OrientedHypergraph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (const auto& h : g.edges()) {
    const auto members = h.members();
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        // anti-oriented contributes +1, co-oriented -1
        const int w = -to_int(members[p].sign) * to_int(members[q].sign);
        a(members[p].vertex, members[q].vertex) += w;
        a(members[q].vertex, members[p].vertex) += w;
      }
    }
  }
  return a;
}

PairGraph nonzero_adjacency(const Eigen::MatrixXi& a) {
  PairGraph pattern(static_cast<int>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != 0) pattern.add(i, j);
    }
  }
  return pattern;
}

Eigen::MatrixXd normalized_laplacian(const OrientedHypergraph& g) {
  const int n = g.vertex_count();
  const Eigen::MatrixXi a = adjacency_matrix(g);
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != 0) l(i, j) -= static_cast<double>(a(i, j)) / g.degree(i);
    }
  }
  return l;
}

Eigen::MatrixXd chung_laplacian(const OrientedHypergraph& g) {
  const int n = g.vertex_count();
  const Eigen::MatrixXi a = adjacency_matrix(g);
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      const double v =
          -static_cast<double>(a(i, j)) / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
      l(i, j) = v;
      l(j, i) = v;
    }
  }
  return l;
}

EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& symmetric, double rel_tol, int max_sweeps) {
  const Eigen::Index n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  Eigen::MatrixXd m = symmetric;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    }
    return std::sqrt(s);
  };

  const double threshold = rel_tol * symmetric.norm();
  int sweep = 0;
  for (; off_norm() > threshold; ++sweep) {
    if (sweep >= max_sweeps) {
      throw EigenNonConvergence("Jacobi eigensolver did not converge in " +
                                std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        // rotation angle zeroing m(p, q); t = tan(theta), smaller root
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return m(a, a) < m(b, b); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = m(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  out.sweeps = sweep;
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  return jacobi_eigen(symmetric).values(0);
}

Eigen::VectorXd SpectralSummary::laplacian_eigenvector(int k) const {
  Eigen::VectorXd f = eigenvectors.col(k).cwiseQuotient(sqrt_degrees);
  return f / f.norm();
}

SpectralSummary spectrum(const OrientedHypergraph& g, double equality_tol) {
  if (!(equality_tol > 0.0)) throw std::invalid_argument("equality tolerance must be positive");
  const Eigen::MatrixXd chung = chung_laplacian(g);
  EigenDecomposition eig = jacobi_eigen(chung);

  SpectralSummary s;
  s.equality_tol = equality_tol;
  s.numerical_tol = 1e-12 * chung.norm();
  // nonnegative up to round-off; clamp the residue
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) < 0.0 && eig.values(k) >= -std::max(s.numerical_tol, 1e-12)) eig.values(k) = 0.0;
  }
  s.eigenvalues = std::move(eig.values);
  s.eigenvectors = std::move(eig.vectors);
  s.sqrt_degrees.resize(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) s.sqrt_degrees(i) = std::sqrt(double(g.degree(i)));
  for (double lambda : s.eigenvalues) {
    if (lambda <= 1.0 - equality_tol) {
      ++s.counts.below_one;
    } else if (lambda >= 1.0 + equality_tol) {
      ++s.counts.above_one;
    } else {
      ++s.counts.at_one;
    }
  }
  return s;
}

double rayleigh_quotient(const OrientedHypergraph& g, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw std::invalid_argument("rayleigh_quotient: vector length differs from vertex count");
  }
  double numerator = 0.0;
  for (const auto& h : g.edges()) {
    double flow = 0.0;
    for (const auto& x : h.members()) flow += to_int(x.sign) * f[x.vertex];
    numerator += flow * flow;
  }
  double denominator = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i) denominator += g.degree(i) * f[i] * f[i];
  if (denominator == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  return numerator / denominator;
}

double vector_quotient(const OrientedHypergraph& g, const Eigen::MatrixXd& vectors) {
  const int n = g.vertex_count();
  if (vectors.rows() != n) throw std::invalid_argument("vector_quotient: need one row per vertex");
  const Eigen::MatrixXd l = normalized_laplacian(g);
  const Eigen::MatrixXd gram = vectors * vectors.transpose();
  double numerator = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      numerator += std::sqrt(double(g.degree(i)) / g.degree(j)) * l(i, j) * gram(i, j);
    }
  }
  const double denominator = gram.trace();
  if (denominator == 0.0) throw std::invalid_argument("vector_quotient: all vectors are zero");
  return numerator / denominator;
}

}  // namespace ohg
