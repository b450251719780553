#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/verdict.hpp"

namespace ohg {

/// Expected values for a built-in instance; absent entries are not compared.
struct Golden {
  std::vector<double> eigenvalues;
  std::optional<double> lambda_min;
  std::optional<double> lambda_max;
  std::optional<int> alpha;
  std::optional<int> alpha_w;
  std::optional<int> omega;
  std::optional<int> chi;
  std::optional<double> chi_v;
  std::optional<int> inertia_bound;
  std::optional<double> ratio_bound;
  std::optional<double> chi_v_lower;
  /// N_geq(1) = N_leq(1).
  std::optional<int> partition_at_one;
  std::optional<double> partition_lower_leq_at_one;
  std::optional<double> partition_lower_geq_at_one;
};

struct BuiltinExample {
  std::string name;
  std::string file;
  std::string description;
  std::string text;
  Golden golden;

  OrientedHypergraph graph() const { return parse_ohg(text); }
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample& builtin_example(const std::string& name);

struct GoldenComparison {
  std::string quantity;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool match = false;
};

inline constexpr double kGoldenSpectralTol = 1e-9;
inline constexpr double kGoldenChiVTol = 1e-4;

/// Compares every golden value against a report computed with lambda = 1 on its grid.
std::vector<GoldenComparison> compare_goldens(const BuiltinExample& example, const BoundReport& report);

}  // namespace ohg
