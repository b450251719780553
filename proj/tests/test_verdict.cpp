#include <cmath>

#include "doctest.h"
#include "ohg/examples.hpp"
#include "ohg/verdict.hpp"

using namespace ohg;

namespace {

const std::vector<double> kGrid{0.5, 1.0, 1.5};

SpectralSummary summary_of(std::vector<double> values) {
  SpectralSummary s;
  s.eigenvalues = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  for (double x : values) {
    if (x < 1 - s.equality_tol) {
      ++s.counts.below_one;
    } else if (x > 1 + s.equality_tol) {
      ++s.counts.above_one;
    } else {
      ++s.counts.at_one;
    }
  }
  return s;
}

OrientedHypergraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return graph_encoding(n, e);
}

OrientedHypergraph example(const char* name) { return builtin_example(name).graph(); }

}  // namespace

TEST_CASE("inertia bound from eigenvalue counts") {
  CHECK(inertia_bound(summary_of({1, 1, 1, 1, 1})) == 5);
  CHECK(inertia_bound(summary_of({0.5, 1, 1.5})) == 2);
  CHECK(inertia_bound(summary_of({0, 1, 2})) == 2);
  CHECK(inertia_bound(summary_of({0, 0, 0, 0, 5})) == 1);

  const auto r = verify_report(example("loops5"), kGrid);
  CHECK(r.inertia.bound == 5);
  CHECK(r.inertia.alpha_w == 5);
  CHECK(r.inertia.sharp);
  const auto ex55 = verify_report(example("ex55"), kGrid);
  CHECK(ex55.inertia.bound == 2);
  CHECK(ex55.inertia.alpha_w == 2);
  CHECK(ex55.inertia.sharp);
}

TEST_CASE("ratio bound: equality, strict gap and applicability") {
  const auto sharp = verify_report(example("ratio-sharp"), kGrid);
  REQUIRE(sharp.ratio.applicable);
  CHECK(std::abs(*sharp.ratio.bound - 1.0) <= 1e-9);
  CHECK(sharp.ratio.alpha == 1);
  CHECK(sharp.ratio.equality);
  REQUIRE(sharp.ratio.equality_checks.has_value());
  CHECK(sharp.ratio.equality_checks->alpha_at_most_half);
  CHECK_FALSE(sharp.ratio.equality_checks->bipartite_graph.has_value());
  CHECK(sharp.ratio.verdict == Verdict::Holds);

  const auto ex42 = verify_report(example("ex42"), kGrid);
  REQUIRE(ex42.ratio.applicable);
  CHECK(std::abs(*ex42.ratio.bound - 2.0) <= 1e-9);
  CHECK(ex42.ratio.alpha == 1);
  CHECK_FALSE(ex42.ratio.equality);
  CHECK(ex42.ratio.verdict == Verdict::Holds);

  const auto ex55 = verify_report(example("ex55"), kGrid);
  CHECK_FALSE(ex55.ratio.applicable);
  CHECK(ex55.ratio.verdict == Verdict::NotApplicable);
}

TEST_CASE("ratio equality on the complete graph forces a regular complement") {
  const auto r = verify_report(complete_graph(4), kGrid);
  REQUIRE(r.ratio.applicable);
  CHECK(std::abs(*r.ratio.bound - 1.0) <= 1e-9);
  CHECK(r.ratio.equality);
  REQUIRE(r.ratio.equality_checks.has_value());
  const auto& eq = *r.ratio.equality_checks;
  REQUIRE(eq.complement_degree.has_value());
  CHECK(std::abs(*eq.complement_degree - 2.0) <= 1e-12);
  CHECK(eq.complement_regular == true);
  CHECK(eq.holds);
}

TEST_CASE("ratio equality at half: repeated edges keep the one-in one-out structure") {
  const auto g = parse_ohg("vertices 2\nedge +1 -2\nedge +1 -2");
  const auto r = verify_report(g, kGrid);
  REQUIRE(r.ratio.equality);
  const auto& eq = *r.ratio.equality_checks;
  CHECK(eq.bipartite_graph == true);
  CHECK(eq.simple_graph == false);
  CHECK(r.ratio.verdict == Verdict::Holds);

  const auto single = verify_report(parse_ohg("vertices 2\nedge +1 -2"), kGrid);
  REQUIRE(single.ratio.equality);
  CHECK(single.ratio.equality_checks->bipartite_graph == true);
  CHECK(single.ratio.equality_checks->simple_graph == true);
}

TEST_CASE("vector chromatic lower bound") {
  CHECK(std::abs(*chi_v_lower_bound(summary_of({0, 0, 0, 0, 5})) - 5.0) <= 1e-12);
  CHECK(std::abs(*chi_v_lower_bound(summary_of({0.5, 1, 1.5})) - 2.0) <= 1e-12);
  CHECK_FALSE(chi_v_lower_bound(summary_of({1, 1, 1, 1, 1})).has_value());
  CHECK_FALSE(chi_v_lower_bound(summary_of({0, 0.5, 1})).has_value());

  const auto single = verify_report(example("single5"), kGrid);
  CHECK(std::abs(*single.chi_v_lower.bound - 5.0) <= 1e-9);
  CHECK(std::abs(single.chi_v.value - 5.0) <= 1e-4);
  CHECK(single.chi_v_lower.verdict == Verdict::Holds);

  const auto ex55 = verify_report(example("ex55"), kGrid);
  CHECK(std::abs(*ex55.chi_v_lower.bound - 2.0) <= 1e-9);
  CHECK(std::abs(ex55.chi_v.value - 3.0) <= 1e-4);
  CHECK(ex55.chi_lower.verdict == Verdict::Holds);

  const auto loops = verify_report(example("loops5"), kGrid);
  CHECK(loops.chi_v_lower.verdict == Verdict::NotApplicable);
  CHECK(loops.chi_lower.verdict == Verdict::NotApplicable);
  CHECK(loops.chi_v.value == 1.0);
}

TEST_CASE("partition lower bounds") {
  const auto s = summary_of({0, 1, 2});
  const auto [leq, geq] = partition_lower_bounds(s, 1.0);
  CHECK(std::abs(*leq - 2.0) <= 1e-12);
  CHECK(std::abs(*geq - 2.0) <= 1e-12);
  const auto half = partition_lower_bounds(s, 0.5);
  CHECK(std::abs(*half.second - 4.0 / 3) <= 1e-12);
  CHECK(integer_lower_bound(*half.second, 1e-9) == 2);

  const auto flat = partition_lower_bounds(summary_of({1, 1, 1, 1, 1}), 1.0);
  CHECK_FALSE(flat.first.has_value());
  CHECK_FALSE(flat.second.has_value());

  const auto ex62 = verify_report(example("ex62"), {1.0});
  REQUIRE(ex62.partition_at.size() == 1);
  const auto& at = ex62.partition_at[0];
  CHECK(at.leq->k == 2);
  CHECK(at.geq->k == 2);
  CHECK(std::abs(*at.lower_leq - 2.0) <= 1e-9);
  CHECK(std::abs(*at.lower_geq - 2.0) <= 1e-9);
  CHECK(at.verdict == Verdict::Holds);
  CHECK(ex62.invariants.chi.colors == 3);
  CHECK(ex62.partition_at_one.n_geq == 2);
  CHECK(ex62.partition_at_one.verdict == Verdict::Holds);

  const auto loops = verify_report(example("loops5"), {1.0});
  CHECK(loops.partition_at[0].verdict == Verdict::NotApplicable);
  CHECK(loops.partition_at[0].geq->k == 1);
}

TEST_CASE("integer lower bounds tolerate rounding") {
  CHECK(integer_lower_bound(2.0, 1e-9) == 2);
  CHECK(integer_lower_bound(2.0 + 1e-12, 1e-9) == 2);
  CHECK(integer_lower_bound(2.001, 1e-9) == 3);
  CHECK(integer_lower_bound(0.0, 1e-9) == 0);
}

TEST_CASE("built-in examples: every check holds and goldens match") {
  for (const auto& ex : builtin_examples()) {
    CAPTURE(ex.name);
    const auto r = verify_report(ex.graph(), kGrid);
    CHECK(r.all_hold());
    CHECK(r.trace_check.verdict == Verdict::Holds);
    CHECK(r.witnesses.verdict == Verdict::Holds);
    for (const auto& [name, v] : r.verdicts()) {
      CAPTURE(name);
      CHECK(v != Verdict::Fails);
    }
    for (const auto& c : compare_goldens(ex, verify_report(ex.graph(), {1.0}))) {
      CAPTURE(c.quantity);
      CHECK(c.match);
    }
  }
}

TEST_CASE("partition section is skipped above the cap") {
  Tolerances tol;
  tol.partition_cap = 4;
  const auto r = verify_report(example("loops5"), kGrid, tol);
  for (const auto& at : r.partition_at) {
    CHECK(at.verdict == Verdict::Skipped);
    CHECK_FALSE(at.geq.has_value());
  }
  CHECK(r.partition_at_one.verdict == Verdict::Skipped);
  CHECK(r.all_hold());
}

TEST_CASE("tolerance and grid validation") {
  Tolerances tol;
  CHECK_NOTHROW(tol.validate());
  tol.eps_k = 0;
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
  tol = {};
  tol.partition_cap = 21;
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
  tol = {};
  tol.sdp_iter_cap = 0;
  CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
  CHECK_THROWS_AS(verify_report(example("ex62"), {-0.5}), std::domain_error);
}

TEST_CASE("property: random instances satisfy every applicable bound") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    CAPTURE(seed);
    const int n = 1 + static_cast<int>(seed % 8);
    const auto g = random_hypergraph({n, 1 + static_cast<int>((seed / 8) % 8), 1, n, seed});
    const auto r = verify_report(g, kGrid);
    CHECK(r.invariants.alpha.size <= r.invariants.alpha_w.size);
    CHECK(r.invariants.alpha_w.size <= r.inertia.bound);
    CHECK(r.partition_at_one.n_geq == r.partition_at_one.n_leq);
    CHECK(r.partition_at_one.n_geq <= r.invariants.chi.colors);
    if (r.ratio.applicable) CHECK(r.invariants.alpha.size <= *r.ratio.bound + 1e-9);
    if (r.chi_v_lower.bound) CHECK(r.chi_v.value >= *r.chi_v_lower.bound - 1e-4);
    CHECK(r.all_hold());
  }
}
