#include "ohg/vectorchrom.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ohg/spectral.hpp"

namespace ohg {

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible:
      return "feasible";
    case Feasibility::Infeasible:
      return "infeasible";
    case Feasibility::Undecided:
      return "undecided";
  }
  return "?";
}

namespace {

// Projection onto {X : X_ii = 1, X_ij = -t on pairs}; free entries untouched.
void project_affine(Eigen::MatrixXd& x, const std::vector<std::pair<int, int>>& pairs, double t) {
  x.diagonal().setOnes();
  for (auto [i, j] : pairs) {
    x(i, j) = -t;
    x(j, i) = -t;
  }
}

// Farkas-type test: W >= 0 supported on the diagonal and the constrained
// pairs with <W, Y> < 0 for one (hence every) affine Y rules out a PSD
// solution. W is built from the negative part of the current iterate.
bool certifies_infeasible(const Eigen::MatrixXd& negative_part,
                          const std::vector<std::pair<int, int>>& pair_list, double t) {
  const Eigen::Index n = negative_part.rows();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  w.diagonal() = -negative_part.diagonal();
  for (auto [i, j] : pair_list) {
    w(i, j) = -negative_part(i, j);
    w(j, i) = -negative_part(i, j);
  }
  const double scale = w.norm();
  if (scale == 0.0) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
  const double shift = std::max(0.0, -es.eigenvalues()(0));
  double inner = w.trace() + shift * static_cast<double>(n);
  for (auto [i, j] : pair_list) inner += 2.0 * w(i, j) * (-t);
  return inner < -1e-12 * scale;
}

}  // namespace

GramFeasibility gram_feasible(const PairGraph& pairs, double t, const GramOptions& options) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("gram_feasible: t must lie in [0, 1]");
  if (!(options.eps_sdp > 0.0) || options.iter_cap < 1 || options.certificate_every < 1) {
    throw std::invalid_argument("gram_feasible: bad options");
  }
  const int n = pairs.vertex_count();
  const auto pair_list = pairs.pairs();
  const bool reflect = options.scheme == ProjectionScheme::Reflections;

  GramFeasibility out;
  out.t = t;

  // y: current affine point; z: Douglas-Rachford governing sequence
  Eigen::MatrixXd y = Eigen::MatrixXd::Identity(n, n);
  project_affine(y, pair_list, t);
  Eigen::MatrixXd z = y;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reflected;
  std::vector<double> history;
  history.reserve(std::min(options.iter_cap, 1 << 16));

  for (int it = 0; it < options.iter_cap; ++it) {
    es.compute(y);
    const Eigen::VectorXd& lambda = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();

    // y is exactly affine, so the residual is its distance to the cone
    double neg_sq = 0.0;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
      if (lambda(k) < 0.0) neg_sq += lambda(k) * lambda(k);
    }
    const double residual = std::sqrt(neg_sq);
    out.residual = residual;
    out.iterations = it + 1;
    if (residual <= options.eps_sdp) {
      out.status = Feasibility::Feasible;
      out.witness = y;
      return out;
    }
    if (options.accept_shrunk_t > 0.0) {
      const double deficit = -lambda(0);
      const double shrunk_t = t / (1.0 + deficit);
      if (shrunk_t >= options.accept_shrunk_t) {
        Eigen::MatrixXd w = (y + deficit * Eigen::MatrixXd::Identity(n, n)) / (1.0 + deficit);
        project_affine(w, pair_list, shrunk_t);
        out.t = shrunk_t;
        out.residual = 0.0;
        out.status = Feasibility::Feasible;
        out.witness = std::move(w);
        return out;
      }
    }

    const Eigen::VectorXd clamped = lambda.cwiseMax(0.0);
    Eigen::MatrixXd x = v * clamped.asDiagonal() * v.transpose();

    if ((it + 1) % options.certificate_every == 0 && certifies_infeasible(y - x, pair_list, t)) {
      out.status = Feasibility::Infeasible;
      out.certified = true;
      return out;
    }

    history.push_back(residual);
    const auto w = static_cast<std::size_t>(options.plateau_window);
    if (history.size() > w) {
      const double before = history[history.size() - 1 - w];
      if (residual > before * (1.0 - options.plateau_rel_drop)) {
        out.status = Feasibility::Infeasible;
        return out;
      }
    }

    if (reflect) {
      reflected.compute(2.0 * y - z);
      const Eigen::MatrixXd p = reflected.eigenvectors() *
                                reflected.eigenvalues().cwiseMax(0.0).asDiagonal() *
                                reflected.eigenvectors().transpose();
      z += p - y;
      y = z;
    } else {
      y = std::move(x);
    }
    project_affine(y, pair_list, t);
  }
  out.status = Feasibility::Undecided;
  return out;
}

WitnessCheck check_witness(const PairGraph& pairs, double t, const Eigen::MatrixXd& witness) {
  WitnessCheck c;
  const int n = pairs.vertex_count();
  for (int i = 0; i < n; ++i) {
    c.max_constraint_violation = std::max(c.max_constraint_violation, std::abs(witness(i, i) - 1.0));
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        c.max_constraint_violation =
            std::max(c.max_constraint_violation, std::abs(witness(i, j) - witness(j, i)));
      }
    }
  }
  for (auto [i, j] : pairs.pairs()) {
    c.max_constraint_violation = std::max(c.max_constraint_violation, std::abs(witness(i, j) + t));
  }
  const Eigen::MatrixXd sym = 0.5 * (witness + witness.transpose());
  c.min_eigenvalue = min_eigenvalue(sym);
  return c;
}

Eigen::MatrixXd simplex_gram(std::span<const int> coloring, int k) {
  const auto n = static_cast<Eigen::Index>(coloring.size());
  Eigen::MatrixXd g(n, n);
  const double off = k > 1 ? -1.0 / (k - 1) : 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = coloring[i] == coloring[j] ? 1.0 : off;
  }
  return g;
}

VectorChromatic vector_chromatic_number(const PairGraph& pairs,
                                        const VectorChromaticOptions& options) {
  if (!(options.eps_k > 0.0)) throw std::invalid_argument("eps_k must be positive");
  VectorChromatic out;
  if (pairs.empty()) {
    out.value = 1.0;
    return out;
  }
  // A probe at k may settle for a certified k' <= k + eps_k / 4; the
  // bracket still halves up to that slack, so the loop terminates.
  auto probe = [&](double k, double slack) {
    GramOptions gram = options.gram;
    gram.accept_shrunk_t = slack > 0.0 ? 1.0 / (k + slack - 1.0) : 0.0;
    out.probes.push_back(gram_feasible(pairs, 1.0 / (k - 1.0), gram));
    const auto& result = out.probes.back();
    if (result.status == Feasibility::Undecided) out.lower_confidence = true;
    return result.status == Feasibility::Feasible ? std::optional(1.0 + 1.0 / result.t)
                                                  : std::nullopt;
  };

  const double n = pairs.vertex_count();
  if (probe(2.0, 0.0)) {
    out.value = 2.0;
    return out;
  }
  // k = n is always realised by a regular simplex on n unit vectors
  double lo = 2.0;
  double hi = n;
  while (hi - lo > options.eps_k) {
    const double mid = 0.5 * (lo + hi);
    if (auto k = probe(mid, 0.25 * options.eps_k)) {
      hi = std::min(hi, *k);
    } else {
      lo = mid;
    }
  }
  out.value = hi;
  return out;
}

VectorChromatic vector_chromatic_number(const OrientedHypergraph& g,
                                        const VectorChromaticOptions& options) {
  return vector_chromatic_number(two_section(g), options);
}

}  // namespace ohg
