#include "ohg/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace ohg {

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = [] {
    std::vector<BuiltinExample> v;

    BuiltinExample loops{"loops5", "loops5.ohg", "five vertices, one singleton hyperedge each",
                         "# identity Laplacian\nvertices 5\nedge +1\nedge +2\nedge +3\nedge +4\nedge +5\n", {}};
    loops.golden.eigenvalues = {1, 1, 1, 1, 1};
    loops.golden.alpha = 5;
    loops.golden.alpha_w = 5;
    loops.golden.omega = 1;
    loops.golden.chi = 1;
    loops.golden.chi_v = 1;
    loops.golden.inertia_bound = 5;
    loops.golden.partition_at_one = 1;
    v.push_back(loops);

    BuiltinExample sharp{"ratio-sharp", "ratio-sharp.ohg",
                         "3-regular, balanced hyperedges on 4 vertices; ratio bound attained",
                         "vertices 4\nedge +1 +2 -3 -4\nedge +1 -2 +3 -4\nedge +1 -2 -3 +4\n", {}};
    sharp.golden.eigenvalues = {0, 4.0 / 3, 4.0 / 3, 4.0 / 3};
    sharp.golden.lambda_max = 4.0 / 3;
    sharp.golden.alpha = 1;
    sharp.golden.omega = 4;
    sharp.golden.chi = 4;
    sharp.golden.ratio_bound = 1;
    v.push_back(sharp);

    BuiltinExample ex42{"ex42", "ex42.ohg", "2-regular with cancelling signs; ratio bound strict",
                        "vertices 4\nedge +1 -2\nedge +3 -4\nedge +1 +2 -3 -4\n", {}};
    ex42.golden.eigenvalues = {0, 1, 1, 2};
    ex42.golden.lambda_max = 2;
    ex42.golden.alpha = 1;
    ex42.golden.alpha_w = 2;
    ex42.golden.omega = 4;
    ex42.golden.chi = 4;
    ex42.golden.ratio_bound = 2;
    v.push_back(ex42);

    BuiltinExample single{"single5", "single5.ohg", "one hyperedge holding all five vertices as inputs",
                          "vertices 5\nedge +1 +2 +3 +4 +5\n", {}};
    single.golden.lambda_min = 0;
    single.golden.lambda_max = 5;
    single.golden.alpha = 1;
    single.golden.omega = 5;
    single.golden.chi = 5;
    single.golden.chi_v = 5;
    single.golden.chi_v_lower = 5;
    v.push_back(single);

    BuiltinExample ex55{"ex55", "ex55.ohg", "vector chromatic number strictly above its spectral bound",
                        "vertices 3\nedge +1 -2\nedge +1 -3\nedge +1 +2 +3\n", {}};
    ex55.golden.eigenvalues = {0.5, 1, 1.5};
    ex55.golden.alpha = 1;
    ex55.golden.alpha_w = 2;
    ex55.golden.omega = 3;
    ex55.golden.chi = 3;
    ex55.golden.chi_v = 3;
    ex55.golden.inertia_bound = 2;
    ex55.golden.chi_v_lower = 2;
    v.push_back(ex55);

    BuiltinExample ex62{"ex62", "ex62.ohg", "partition numbers below the chromatic number",
                        "vertices 3\nedge +1 -2\nedge +1 +2 -3\n", {}};
    ex62.golden.eigenvalues = {0, 1, 2};
    ex62.golden.alpha = 1;
    ex62.golden.alpha_w = 2;
    ex62.golden.chi = 3;
    ex62.golden.inertia_bound = 2;
    ex62.golden.partition_at_one = 2;
    ex62.golden.partition_lower_leq_at_one = 2;
    ex62.golden.partition_lower_geq_at_one = 2;
    v.push_back(ex62);
    return v;
  }();
  return examples;
}

const BuiltinExample& builtin_example(const std::string& name) {
  for (const auto& e : builtin_examples()) {
    if (e.name == name || e.file == name) return e;
  }
  throw std::out_of_range("no built-in example named '" + name + "'");
}

std::vector<GoldenComparison> compare_goldens(const BuiltinExample& example, const BoundReport& report) {
  std::vector<GoldenComparison> out;
  auto add = [&](const std::string& what, double expected, std::optional<double> actual, double tol) {
    GoldenComparison c{what, expected, actual.value_or(std::nan("")), tol, false};
    c.match = actual.has_value() && std::abs(*actual - expected) <= tol;
    out.push_back(c);
  };
  const auto& g = example.golden;
  const auto& s = report.spectrum;

  if (!g.eigenvalues.empty()) {
    for (std::size_t i = 0; i < g.eigenvalues.size(); ++i) {
      std::optional<double> actual;
      if (static_cast<Eigen::Index>(i) < s.eigenvalues.size()) actual = s.eigenvalues(i);
      add("lambda_" + std::to_string(i + 1), g.eigenvalues[i], actual, kGoldenSpectralTol);
    }
  }
  if (g.lambda_min) add("lambda_min", *g.lambda_min, s.lambda_min(), kGoldenSpectralTol);
  if (g.lambda_max) add("lambda_max", *g.lambda_max, s.lambda_max(), kGoldenSpectralTol);
  if (g.alpha) add("alpha", *g.alpha, report.invariants.alpha.size, 0);
  if (g.alpha_w) add("alpha_w", *g.alpha_w, report.invariants.alpha_w.size, 0);
  if (g.omega) add("omega", *g.omega, report.invariants.omega.size, 0);
  if (g.chi) add("chi", *g.chi, report.invariants.chi.colors, 0);
  if (g.chi_v) add("chi_v", *g.chi_v, report.chi_v.value, kGoldenChiVTol);
  if (g.inertia_bound) add("inertia_bound", *g.inertia_bound, report.inertia.bound, 0);
  if (g.ratio_bound) add("ratio_bound", *g.ratio_bound, report.ratio.bound, kGoldenSpectralTol);
  if (g.chi_v_lower) add("chi_v_lower", *g.chi_v_lower, report.chi_v_lower.bound, kGoldenSpectralTol);

  const PartitionAt* at_one = nullptr;
  for (const auto& p : report.partition_at) {
    if (p.lambda == 1.0) at_one = &p;
  }
  if (g.partition_at_one) {
    const bool computed = report.partition_at_one.verdict != Verdict::Skipped;
    add("N_geq(1)", *g.partition_at_one,
        computed ? std::optional<double>(report.partition_at_one.n_geq) : std::nullopt, 0);
    add("N_leq(1)", *g.partition_at_one,
        computed ? std::optional<double>(report.partition_at_one.n_leq) : std::nullopt, 0);
  }
  if (g.partition_lower_leq_at_one) {
    add("lower_leq(1)", *g.partition_lower_leq_at_one, at_one ? at_one->lower_leq : std::nullopt,
        kGoldenSpectralTol);
  }
  if (g.partition_lower_geq_at_one) {
    add("lower_geq(1)", *g.partition_lower_geq_at_one, at_one ? at_one->lower_geq : std::nullopt,
        kGoldenSpectralTol);
  }
  return out;
}

}  // namespace ohg
