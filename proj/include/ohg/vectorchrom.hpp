#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

enum class Feasibility { Feasible, Infeasible, Undecided };

const char* to_string(Feasibility f);

/// How the two projections are combined.
///  - Alternating: X <- P_psd(Y), Y <- P_affine(X).
///  - Reflections: Douglas-Rachford, z <- z + P_psd(2 P_affine(z) - z) - P_affine(z);
///    the monitored point is P_affine(z).
/// Plain alternation slows to a crawl where the feasible set degenerates to
/// a low-rank face, which is exactly where the bisection ends up.
enum class ProjectionScheme { Alternating, Reflections };

struct GramOptions {
  ProjectionScheme scheme = ProjectionScheme::Reflections;
  double eps_sdp = 1e-7;
  int iter_cap = 50000;
  /// Iterations over which a stalled residual is read as infeasibility.
  int plateau_window = 500;
  /// Relative residual decrease below which the window counts as stalled.
  double plateau_rel_drop = 1e-6;
  /// How often the dual infeasibility certificate is attempted.
  int certificate_every = 25;
  /// When positive, an iterate Y with smallest eigenvalue -d is accepted as
  /// soon as the exactly PSD matrix (Y + d Id) / (1 + d) reaches a target of
  /// at least this value; the verdict then refers to t / (1 + d).
  double accept_shrunk_t = 0.0;
};

/// Outcome of searching for a PSD matrix X with X_ii = 1 and X_ij = -t on
/// every constrained pair. A feasible verdict reached through
/// GramOptions::accept_shrunk_t reports the (slightly smaller) t it proves.
struct GramFeasibility {
  double t = 0.0;
  Feasibility status = Feasibility::Undecided;
  std::optional<Eigen::MatrixXd> witness;
  /// Max constraint violation plus distance of the final iterate to the PSD cone.
  double residual = 0.0;
  int iterations = 0;
  /// Infeasibility backed by a dual certificate rather than a stalled residual.
  bool certified = false;
};

/// Projection iteration between the affine constraint set and the PSD cone.
GramFeasibility gram_feasible(const PairGraph& pairs, double t, const GramOptions& options = {});

struct WitnessCheck {
  double max_constraint_violation = 0.0;
  double min_eigenvalue = 0.0;
};

/// Re-examines a witness with the Jacobi eigensolver.
WitnessCheck check_witness(const PairGraph& pairs, double t, const Eigen::MatrixXd& witness);

/// Gram matrix of k unit vectors of a centred regular simplex, assigned by
/// colour class: entry (i, j) is 1 if colour[i] == colour[j], else -1/(k-1).
Eigen::MatrixXd simplex_gram(std::span<const int> coloring, int k);

struct VectorChromatic {
  double value = 1.0;
  /// Some probe ended undecided and was treated as infeasible.
  bool lower_confidence = false;
  std::vector<GramFeasibility> probes;
};

struct VectorChromaticOptions {
  double eps_k = 1e-4;
  GramOptions gram;
};

/// Smallest real k >= 2 whose target -1/(k-1) is Gram-feasible, located by
/// bisection on [2, n] to width eps_k; 1 when no pair is constrained.
VectorChromatic vector_chromatic_number(const PairGraph& pairs,
                                        const VectorChromaticOptions& options = {});
VectorChromatic vector_chromatic_number(const OrientedHypergraph& g,
                                        const VectorChromaticOptions& options = {});

}  // namespace ohg
