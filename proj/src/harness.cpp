#include "ohg/harness.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>

namespace ohg {

void HarnessOptions::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (max_n < 1 || max_n > kMaxVertices) {
    throw std::invalid_argument("max-n must lie in 1.." + std::to_string(kMaxVertices));
  }
  if (graph_only && max_n < 2) throw std::invalid_argument("graph-only instances need max-n >= 2");
  if (max_m < 1) throw std::invalid_argument("max-m must be at least 1");
  for (double lambda : lambda_grid) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda grid values must be nonnegative");
  }
  tol.validate();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialResult {
  std::vector<std::pair<const char*, Verdict>> verdicts;
  bool is_graph = false;
  bool graph_equality = false;
  bool lower_confidence = false;
  int feasible_probes = 0;
  std::optional<TrialFailure> failure;
};

TrialResult run_trial(const HarnessOptions& options, int index) {
  const auto g = trial_instance(options, index);
  const auto report = verify_report(g, options.lambda_grid, options.tol);
  TrialResult r;
  r.verdicts = report.verdicts();
  r.is_graph = report.profile.is_graph;
  const auto& one = report.partition_at_one;
  r.graph_equality = r.is_graph && one.verdict == Verdict::Holds && one.n_geq == one.chi && one.n_leq == one.chi;
  r.lower_confidence = report.chi_v.lower_confidence;
  r.feasible_probes = static_cast<int>(std::count_if(report.chi_v.probes.begin(), report.chi_v.probes.end(),
                                                     [](const auto& p) { return p.status == Feasibility::Feasible; }));
  if (!report.all_hold()) {
    TrialFailure f;
    f.index = index;
    f.seed = trial_seed(options.seed, index);
    for (const auto& [name, v] : r.verdicts) {
      if (v == Verdict::Fails) f.failed_checks.emplace_back(name);
    }
    f.ohg_text = serialize_ohg(g);
    r.failure = std::move(f);
  }
  return r;
}

HarnessSummary merge(const std::vector<TrialResult>& results) {
  HarnessSummary s;
  s.trials = static_cast<int>(results.size());
  for (const auto& r : results) {
    for (const auto& [name, v] : r.verdicts) {
      auto it = std::find_if(s.tallies.begin(), s.tallies.end(), [&](const auto& t) { return t.check == name; });
      if (it == s.tallies.end()) {
        s.tallies.push_back(CheckTally{name});
        it = s.tallies.end() - 1;
      }
      switch (v) {
        case Verdict::Holds:
          ++it->holds;
          break;
        case Verdict::Fails:
          ++it->fails;
          break;
        case Verdict::NotApplicable:
          ++it->not_applicable;
          break;
        case Verdict::Skipped:
          ++it->skipped;
          break;
      }
    }
    s.graph_instances += r.is_graph;
    s.graph_partition_equality += r.graph_equality;
    s.lower_confidence += r.lower_confidence;
    s.feasible_probes += r.feasible_probes;
    if (r.failure) s.failures.push_back(*r.failure);
  }
  return s;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index));
}

OrientedHypergraph trial_instance(const HarnessOptions& options, int index) {
  std::mt19937_64 rng(trial_seed(options.seed, index));
  const int min_n = options.graph_only ? 2 : 1;
  const int n = std::uniform_int_distribution<int>(min_n, options.max_n)(rng);
  int m = std::uniform_int_distribution<int>(1, options.max_m)(rng);
  if (options.graph_only) {
    m = std::min(m, n * (n - 1) / 2);
    return random_graph(n, m, rng());
  }
  return random_hypergraph(RandomSpec{n, m, 1, n, rng()});
}

HarnessSummary run_harness(const HarnessOptions& options) {
  options.validate();
  std::vector<TrialResult> results(options.trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < options.trials; ++i) results[i] = run_trial(options, i);
  return merge(results);
}

HarnessSummary run_harness_serial(const HarnessOptions& options) {
  options.validate();
  std::vector<TrialResult> results;
  results.reserve(options.trials);
  for (int i = 0; i < options.trials; ++i) results.push_back(run_trial(options, i));
  return merge(results);
}

std::vector<std::filesystem::path> write_failures(const HarnessSummary& summary,
                                                  const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  if (summary.failures.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (const auto& f : summary.failures) {
    const auto path = dir / ("failure-" + std::to_string(f.index) + ".ohg");
    std::ofstream out(path);
    out << "# trial " << f.index << " seed " << f.seed << "\n# failed:";
    for (const auto& c : f.failed_checks) out << ' ' << c;
    out << '\n' << f.ohg_text;
    paths.push_back(path);
  }
  return paths;
}

}  // namespace ohg
