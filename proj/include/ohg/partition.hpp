#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/spectral.hpp"

namespace ohg {

/// GEQ: every part has lambda_min >= lambda. LEQ: every part has lambda_max <= lambda.
enum class PartitionKind { Geq, Leq };

const char* to_string(PartitionKind kind);

/// Hard limit for the subset table and the dynamic programme.
inline constexpr int kPartitionHardCap = 20;

/// Smallest and largest normalized-Laplacian eigenvalue of Γ|_S for every
/// nonempty vertex mask S (index 0 is unused).
struct SubsetSpectra {
  int n = 0;
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t size() const { return lo.size(); }
  bool admissible(std::uint64_t mask, double lambda, PartitionKind kind, double eps) const;
};

/// Parallel kernel: principal submatrices of the Chung Laplacian, one
/// Jacobi solve per subset, OpenMP over masks.
SubsetSpectra subset_spectra(const OrientedHypergraph& g);
/// Serial reference: builds every restriction explicitly.
SubsetSpectra subset_spectra_serial(const OrientedHypergraph& g);

/// Whether Γ|_S satisfies the part condition for `kind` with slack eps.
bool admissible(const OrientedHypergraph& g, std::span<const int> subset, double lambda,
                PartitionKind kind, double eps = kDefaultEqualityTol);

struct PartitionResult {
  double lambda = 1.0;
  PartitionKind kind = PartitionKind::Geq;
  int k = 0;
  std::vector<std::vector<int>> parts;
  /// (lambda_min, lambda_max) of Γ restricted to each part.
  std::vector<std::pair<double, double>> per_part_extremes;
};

/// Throws std::domain_error for GEQ with lambda > 1 or LEQ with lambda < 1.
void check_partition_lambda(double lambda, PartitionKind kind);

/// Minimum admissible partition by dynamic programming over submasks.
/// Returns the lexicographically smallest optimal list of parts.
PartitionResult partition_number(const SubsetSpectra& table, double lambda, PartitionKind kind,
                                 double eps = kDefaultEqualityTol);
PartitionResult partition_number(const OrientedHypergraph& g, double lambda, PartitionKind kind,
                                 double eps = kDefaultEqualityTol);

/// Reference: scans every set partition (restricted growth strings); n <= 10.
int partition_number_exhaustive(const OrientedHypergraph& g, double lambda, PartitionKind kind,
                                double eps = kDefaultEqualityTol);

}  // namespace ohg
