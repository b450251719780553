#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ohg/combinat.hpp"
#include "ohg/hypergraph.hpp"
#include "ohg/partition.hpp"
#include "ohg/spectral.hpp"
#include "ohg/vectorchrom.hpp"

namespace ohg {

struct Tolerances {
  double eps_eq = kDefaultEqualityTol;
  double eps_sdp = 1e-7;
  double eps_k = 1e-4;
  int sdp_iter_cap = 50000;
  /// Partition numbers are skipped above this vertex count.
  int partition_cap = 14;

  /// Throws std::invalid_argument if any tolerance is non-positive or a cap
  /// is out of range.
  void validate() const;
};

enum class Verdict { Holds, Fails, NotApplicable, Skipped };

const char* to_string(Verdict v);
inline Verdict verdict_of(bool holds) { return holds ? Verdict::Holds : Verdict::Fails; }

/// alpha <= alpha_w <= min(#{lambda <= 1}, #{lambda >= 1}).
struct InertiaCheck {
  int alpha = 0;
  int alpha_w = 0;
  int bound = 0;
  bool sharp = false;
  Verdict verdict = Verdict::Fails;
};

/// Structure forced when the ratio bound is attained.
struct RatioEqualityChecks {
  bool alpha_at_most_half = false;
  /// Only evaluated when alpha = n/2: every hyperedge has one input and one
  /// output, and U and V \ U are both independent.
  std::optional<bool> bipartite_graph;
  /// Informational when alpha = n/2: H additionally has no repeated edge.
  std::optional<bool> simple_graph;
  /// Only evaluated when every hyperedge has one input and one output: degree
  /// d(n - 2 alpha)/(n - alpha) and whether the graph induced on V \ U is
  /// regular of that degree.
  std::optional<double> complement_degree;
  std::optional<bool> complement_regular;
  bool holds = false;
};

/// alpha <= n (1 - 1/lambda_n) for d-regular, input/output-balanced Γ.
struct RatioCheck {
  bool applicable = false;
  int alpha = 0;
  std::optional<double> bound;
  bool equality = false;
  std::optional<RatioEqualityChecks> equality_checks;
  Verdict verdict = Verdict::NotApplicable;
};

/// omega <= chi_v <= chi.
struct SandwichCheck {
  int omega = 0;
  double chi_v = 0.0;
  int chi = 0;
  bool lower_confidence = false;
  Verdict verdict = Verdict::Fails;
};

/// value >= (lambda_n - lambda_1) / min(lambda_n - 1, 1 - lambda_1).
struct SpreadBoundCheck {
  std::optional<double> bound;
  double value = 0.0;
  Verdict verdict = Verdict::NotApplicable;
};

/// Partition numbers at one lambda against their spectral lower bounds.
struct PartitionAt {
  double lambda = 1.0;
  std::optional<PartitionResult> leq;
  std::optional<PartitionResult> geq;
  std::optional<double> lower_leq;
  std::optional<double> lower_geq;
  Verdict verdict = Verdict::Skipped;
};

/// N_geq(1) = N_leq(1) <= chi, with equality for graphs.
struct PartitionAtOne {
  int n_geq = 0;
  int n_leq = 0;
  int chi = 0;
  bool is_graph = false;
  Verdict verdict = Verdict::Skipped;
};

struct TraceCheck {
  double sum_eigenvalues = 0.0;
  int n = 0;
  bool nonnegative = false;
  Verdict verdict = Verdict::Fails;
};

/// Every witness passes its definitional check.
struct WitnessChecks {
  bool alpha = false;
  bool alpha_w = false;
  bool omega = false;
  bool chi = false;
  bool chi_v = false;
  Verdict verdict = Verdict::Fails;
};

struct BoundReport {
  int n = 0;
  StructuralProfile profile;
  SpectralSummary spectrum;
  InvariantSet invariants;
  VectorChromatic chi_v;
  InertiaCheck inertia;
  RatioCheck ratio;
  SandwichCheck sandwich;
  SpreadBoundCheck chi_v_lower;
  SpreadBoundCheck chi_lower;
  std::vector<PartitionAt> partition_at;
  PartitionAtOne partition_at_one;
  TraceCheck trace_check;
  WitnessChecks witnesses;

  /// No check fails; not-applicable and skipped sections do not count.
  bool all_hold() const;
  std::vector<std::pair<const char*, Verdict>> verdicts() const;
};

int inertia_bound(const SpectralSummary& summary);
/// n (1 - 1/lambda_n) when Γ is regular and input/output balanced.
std::optional<double> ratio_bound(const StructuralProfile& profile, const SpectralSummary& summary);
/// (lambda_n - lambda_1) / min(lambda_n - 1, 1 - lambda_1) when the
/// denominator exceeds the equality tolerance.
std::optional<double> chi_v_lower_bound(const SpectralSummary& summary);
/// ((lambda_n - lambda_1)/(lambda - lambda_1), (lambda_n - lambda_1)/(lambda_n - lambda)),
/// each present only when its denominator exceeds the equality tolerance.
std::pair<std::optional<double>, std::optional<double>> partition_lower_bounds(
    const SpectralSummary& summary, double lambda);

/// Lower bound on an integer quantity: ceil(bound - eps).
int integer_lower_bound(double bound, double eps);

BoundReport verify_report(const OrientedHypergraph& g, const std::vector<double>& lambda_grid,
                          const Tolerances& tol = {});

}  // namespace ohg
