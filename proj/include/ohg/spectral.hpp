#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>

#include "ohg/hypergraph.hpp"

namespace ohg {

/// Default tolerance for classifying an eigenvalue as equal to 1.
inline constexpr double kDefaultEqualityTol = 1e-9;

/// A_ij = #(hyperedges where i, j are anti-oriented) - #(co-oriented).
/// Integer-exact, symmetric, zero diagonal.
Eigen::MatrixXi adjacency_matrix(const OrientedHypergraph& g);

/// Adjacency restricted to the "A_ij != 0" pattern.
PairGraph nonzero_adjacency(const Eigen::MatrixXi& a);

/// L = Id - D^{-1} A.
Eigen::MatrixXd normalized_laplacian(const OrientedHypergraph& g);

/// D^{1/2} L D^{-1/2} = Id - D^{-1/2} A D^{-1/2}; exactly symmetric.
Eigen::MatrixXd chung_laplacian(const OrientedHypergraph& g);

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops once the
/// off-diagonal Frobenius norm is <= rel_tol * ||M||_F; throws
/// EigenNonConvergence after max_sweeps.
EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& symmetric, double rel_tol = 1e-12,
                                int max_sweeps = 100);

/// Smallest eigenvalue by the same Jacobi routine.
double min_eigenvalue(const Eigen::MatrixXd& symmetric);

struct SpectrumCounts {
  int below_one = 0;
  int at_one = 0;
  int above_one = 0;
};

/// Sorted normalized-Laplacian spectrum, Chung-Laplacian eigenvectors and
/// the eigenvalue counts on either side of 1.
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  Eigen::VectorXd sqrt_degrees;
  SpectrumCounts counts;
  double equality_tol = kDefaultEqualityTol;
  double numerical_tol = 0.0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double lambda_min() const { return eigenvalues(0); }
  double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
  /// Eigenvector of L (not of the Chung Laplacian) for eigenvalue k.
  Eigen::VectorXd laplacian_eigenvector(int k) const;
};

SpectralSummary spectrum(const OrientedHypergraph& g, double equality_tol = kDefaultEqualityTol);

/// Rayleigh quotient evaluated from the incidences:
/// sum_h (sum_{in} f - sum_{out} f)^2 / sum_i deg(i) f(i)^2.
double rayleigh_quotient(const OrientedHypergraph& g, std::span<const double> f);

/// (sum_ij sqrt(deg i / deg j) L_ij <v_i, v_j>) / sum_i |v_i|^2 where v_i is
/// row i of `vectors`.
double vector_quotient(const OrientedHypergraph& g, const Eigen::MatrixXd& vectors);

}  // namespace ohg
