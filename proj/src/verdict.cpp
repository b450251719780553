#include "ohg/verdict.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ohg {

void Tolerances::validate() const {
  if (!(eps_eq > 0.0) || !(eps_sdp > 0.0) || !(eps_k > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (sdp_iter_cap < 1) throw std::invalid_argument("SDP iteration cap must be at least 1");
  if (partition_cap < 1 || partition_cap > kPartitionHardCap) {
    throw std::invalid_argument("partition cap must lie in 1.." + std::to_string(kPartitionHardCap));
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "FAILS";
    case Verdict::NotApplicable:
      return "not applicable";
    case Verdict::Skipped:
      return "skipped";
  }
  return "?";
}

std::vector<std::pair<const char*, Verdict>> BoundReport::verdicts() const {
  std::vector<std::pair<const char*, Verdict>> out = {
      {"inertia", inertia.verdict},
      {"ratio", ratio.verdict},
      {"sandwich", sandwich.verdict},
      {"chi_v_lower", chi_v_lower.verdict},
      {"chi_lower", chi_lower.verdict},
      {"partition_at_one", partition_at_one.verdict},
  };
  for (const auto& p : partition_at) out.emplace_back("partition_bounds", p.verdict);
  out.emplace_back("trace", trace_check.verdict);
  out.emplace_back("witnesses", witnesses.verdict);
  return out;
}

bool BoundReport::all_hold() const {
  const auto all = verdicts();
  return std::none_of(all.begin(), all.end(), [](const auto& v) { return v.second == Verdict::Fails; });
}

int inertia_bound(const SpectralSummary& summary) {
  const auto& c = summary.counts;
  return std::min(c.below_one + c.at_one, c.at_one + c.above_one);
}

std::optional<double> ratio_bound(const StructuralProfile& profile, const SpectralSummary& summary) {
  if (!profile.regular_degree || !profile.io_balanced) return std::nullopt;
  const double top = summary.lambda_max();
  if (!(top > summary.equality_tol)) return std::nullopt;
  return summary.size() * (1.0 - 1.0 / top);
}

std::optional<double> chi_v_lower_bound(const SpectralSummary& summary) {
  const double lo = summary.lambda_min();
  const double hi = summary.lambda_max();
  const double denominator = std::min(hi - 1.0, 1.0 - lo);
  if (!(denominator > summary.equality_tol)) return std::nullopt;
  return (hi - lo) / denominator;
}

std::pair<std::optional<double>, std::optional<double>> partition_lower_bounds(
    const SpectralSummary& summary, double lambda) {
  const double lo = summary.lambda_min();
  const double hi = summary.lambda_max();
  std::pair<std::optional<double>, std::optional<double>> out;
  if (lambda - lo > summary.equality_tol) out.first = (hi - lo) / (lambda - lo);
  if (hi - lambda > summary.equality_tol) out.second = (hi - lo) / (hi - lambda);
  return out;
}

int integer_lower_bound(double bound, double eps) { return static_cast<int>(std::ceil(bound - eps)); }

namespace {

RatioEqualityChecks ratio_equality(const OrientedHypergraph& g, const StructuralProfile& profile,
                                   const PairGraph& pairs, const SetWitness& alpha) {
  const int n = g.vertex_count();
  const int a = alpha.size;
  RatioEqualityChecks c;
  c.alpha_at_most_half = 2 * a <= n;

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t inside = vertices_to_mask(alpha.vertices);
  const std::uint64_t outside = all & ~inside;

  const bool one_in_one_out = std::all_of(g.edges().begin(), g.edges().end(), [](const Hyperedge& h) {
    return h.inputs() == 1 && h.outputs() == 1;
  });
  if (2 * a == n) {
    bool other_side_independent = true;
    for (int v : mask_to_vertices(outside)) {
      if (pairs.neighbours(v) & outside) other_side_independent = false;
    }
    c.bipartite_graph = one_in_one_out && other_side_independent;
    c.simple_graph = profile.is_graph;
  }
  if (one_in_one_out && profile.regular_degree && a < n) {
    const double d = *profile.regular_degree;
    const double expected = d * (n - 2.0 * a) / (n - a);
    c.complement_degree = expected;
    bool regular = true;
    for (int v : mask_to_vertices(outside)) {
      int inner_degree = 0;
      for (const auto& h : g.edges()) {
        if (h.contains(v) && (h.vertex_mask() & ~outside) == 0) ++inner_degree;
      }
      if (std::abs(inner_degree - expected) > 1e-9) regular = false;
    }
    c.complement_regular = regular;
  }
  c.holds = c.alpha_at_most_half && c.bipartite_graph.value_or(true) &&
            c.complement_regular.value_or(true);
  return c;
}

bool chi_v_witnesses_valid(const PairGraph& pairs, const VectorChromatic& chi_v) {
  constexpr double kWitnessTol = 1e-6;
  if (pairs.empty()) return chi_v.value == 1.0;
  bool any = false;
  for (const auto& probe : chi_v.probes) {
    if (probe.status != Feasibility::Feasible) continue;
    any = true;
    const auto c = check_witness(pairs, probe.t, *probe.witness);
    if (c.max_constraint_violation > kWitnessTol || c.min_eigenvalue < -kWitnessTol) return false;
  }
  if (!any) {
    // chi_v = n rests on the regular simplex on n vectors
    std::vector<int> distinct(pairs.vertex_count());
    for (int v = 0; v < pairs.vertex_count(); ++v) distinct[v] = v + 1;
    const int n = pairs.vertex_count();
    const auto c = check_witness(pairs, 1.0 / (n - 1), simplex_gram(distinct, n));
    return c.max_constraint_violation <= kWitnessTol && c.min_eigenvalue >= -kWitnessTol;
  }
  return true;
}

}  // namespace

BoundReport verify_report(const OrientedHypergraph& g, const std::vector<double>& lambda_grid,
                          const Tolerances& tol) {
  tol.validate();
  for (double lambda : lambda_grid) {
    if (!(lambda >= 0.0)) throw std::domain_error("lambda grid values must be nonnegative");
  }
  BoundReport r;
  r.n = g.vertex_count();
  r.profile = structural_profile(g);
  r.spectrum = spectrum(g, tol.eps_eq);
  r.invariants = invariants(g);
  const PairGraph pairs = two_section(g);
  const Eigen::MatrixXi adjacency = adjacency_matrix(g);

  VectorChromaticOptions vopts;
  vopts.eps_k = tol.eps_k;
  vopts.gram.eps_sdp = tol.eps_sdp;
  vopts.gram.iter_cap = tol.sdp_iter_cap;
  r.chi_v = vector_chromatic_number(pairs, vopts);

  const auto& inv = r.invariants;
  const auto& s = r.spectrum;

  r.inertia.alpha = inv.alpha.size;
  r.inertia.alpha_w = inv.alpha_w.size;
  r.inertia.bound = inertia_bound(s);
  r.inertia.sharp = inv.alpha_w.size == r.inertia.bound;
  r.inertia.verdict = verdict_of(inv.alpha.size <= inv.alpha_w.size && inv.alpha_w.size <= r.inertia.bound);

  r.ratio.alpha = inv.alpha.size;
  r.ratio.bound = ratio_bound(r.profile, s);
  r.ratio.applicable = r.ratio.bound.has_value();
  if (r.ratio.applicable) {
    const double bound = *r.ratio.bound;
    r.ratio.equality = std::abs(inv.alpha.size - bound) <= tol.eps_eq;
    bool holds = inv.alpha.size <= bound + tol.eps_eq;
    if (r.ratio.equality) {
      r.ratio.equality_checks = ratio_equality(g, r.profile, pairs, inv.alpha);
      holds = holds && r.ratio.equality_checks->holds;
    }
    r.ratio.verdict = verdict_of(holds);
  }

  r.sandwich.omega = inv.omega.size;
  r.sandwich.chi = inv.chi.colors;
  r.sandwich.chi_v = r.chi_v.value;
  r.sandwich.lower_confidence = r.chi_v.lower_confidence;
  r.sandwich.verdict = verdict_of(inv.omega.size - tol.eps_k <= r.chi_v.value &&
                                  r.chi_v.value <= inv.chi.colors + tol.eps_k &&
                                  inv.omega.size <= inv.chi.colors);

  r.chi_v_lower.bound = chi_v_lower_bound(s);
  r.chi_v_lower.value = r.chi_v.value;
  if (r.chi_v_lower.bound) {
    r.chi_v_lower.verdict = verdict_of(r.chi_v.value >= *r.chi_v_lower.bound - tol.eps_k);
  }
  r.chi_lower.bound = r.chi_v_lower.bound;
  r.chi_lower.value = inv.chi.colors;
  if (r.chi_lower.bound) {
    r.chi_lower.verdict =
        verdict_of(inv.chi.colors >= integer_lower_bound(*r.chi_lower.bound, tol.eps_eq));
  }

  const bool partition_skipped = g.vertex_count() > tol.partition_cap;
  std::optional<SubsetSpectra> table;
  if (!partition_skipped) table = subset_spectra(g);

  for (double lambda : lambda_grid) {
    PartitionAt at;
    at.lambda = lambda;
    const auto [lower_leq, lower_geq] = partition_lower_bounds(s, lambda);
    if (lambda >= 1.0) at.lower_leq = lower_leq;
    if (lambda <= 1.0) at.lower_geq = lower_geq;
    if (table) {
      bool holds = true;
      if (lambda >= 1.0) {
        at.leq = partition_number(*table, lambda, PartitionKind::Leq, tol.eps_eq);
        if (at.lower_leq) holds = holds && at.leq->k >= integer_lower_bound(*at.lower_leq, tol.eps_eq);
      }
      if (lambda <= 1.0) {
        at.geq = partition_number(*table, lambda, PartitionKind::Geq, tol.eps_eq);
        if (at.lower_geq) holds = holds && at.geq->k >= integer_lower_bound(*at.lower_geq, tol.eps_eq);
      }
      at.verdict = (at.lower_leq || at.lower_geq) ? verdict_of(holds) : Verdict::NotApplicable;
    }
    r.partition_at.push_back(std::move(at));
  }

  r.partition_at_one.chi = inv.chi.colors;
  r.partition_at_one.is_graph = r.profile.is_graph;
  if (table) {
    r.partition_at_one.n_geq = partition_number(*table, 1.0, PartitionKind::Geq, tol.eps_eq).k;
    r.partition_at_one.n_leq = partition_number(*table, 1.0, PartitionKind::Leq, tol.eps_eq).k;
    const auto& p = r.partition_at_one;
    bool holds = p.n_geq == p.n_leq && p.n_geq <= p.chi;
    if (p.is_graph) holds = holds && p.n_geq == p.chi;
    r.partition_at_one.verdict = verdict_of(holds);
  }

  r.trace_check.n = r.n;
  r.trace_check.sum_eigenvalues = s.eigenvalues.sum();
  r.trace_check.nonnegative = s.lambda_min() >= -std::max(s.numerical_tol, 1e-12);
  r.trace_check.verdict = verdict_of(std::abs(r.trace_check.sum_eigenvalues - r.n) <= 1e-9 * r.n &&
                                     r.trace_check.nonnegative);

  auto& w = r.witnesses;
  w.alpha = static_cast<int>(inv.alpha.vertices.size()) == inv.alpha.size &&
            is_independent(g, inv.alpha.vertices);
  w.alpha_w = static_cast<int>(inv.alpha_w.vertices.size()) == inv.alpha_w.size &&
              is_weakly_independent(adjacency, inv.alpha_w.vertices);
  w.omega = static_cast<int>(inv.omega.vertices.size()) == inv.omega.size &&
            is_clique(pairs, inv.omega.vertices);
  w.chi = is_proper_coloring(pairs, inv.chi.coloring, inv.chi.colors);
  w.chi_v = chi_v_witnesses_valid(pairs, r.chi_v);
  w.verdict = verdict_of(w.alpha && w.alpha_w && w.omega && w.chi && w.chi_v);
  return r;
}

}  // namespace ohg
