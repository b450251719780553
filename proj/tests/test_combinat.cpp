#include "doctest.h"
#include "oracles.hpp"
#include "ohg/combinat.hpp"
#include "ohg/spectral.hpp"

using namespace ohg;

namespace {

const char* kLoops5 = "vertices 5\nedge +1\nedge +2\nedge +3\nedge +4\nedge +5";
const char* kSharp = "vertices 4\nedge +1 +2 -3 -4\nedge +1 -2 +3 -4\nedge +1 -2 -3 +4";
const char* kEx42 = "vertices 4\nedge +1 -2\nedge +3 -4\nedge +1 +2 -3 -4";
const char* kSingle5 = "vertices 5\nedge +1 +2 +3 +4 +5";
const char* kEx55 = "vertices 3\nedge +1 -2\nedge +1 -3\nedge +1 +2 +3";
const char* kEx62 = "vertices 3\nedge +1 -2\nedge +1 +2 -3";

OrientedHypergraph random_instance(std::uint64_t seed) {
  const int n = 1 + static_cast<int>(seed % 8);
  return random_hypergraph({n, 1 + static_cast<int>((seed / 8) % 8), 1, n, seed});
}

void check_witnesses(const OrientedHypergraph& g, const InvariantSet& inv) {
  CHECK(static_cast<int>(inv.alpha.vertices.size()) == inv.alpha.size);
  CHECK(is_independent(g, inv.alpha.vertices));
  CHECK(is_weakly_independent(adjacency_matrix(g), inv.alpha_w.vertices));
  CHECK(static_cast<int>(inv.alpha_w.vertices.size()) == inv.alpha_w.size);
  CHECK(is_clique(two_section(g), inv.omega.vertices));
  CHECK(static_cast<int>(inv.omega.vertices.size()) == inv.omega.size);
  CHECK(is_proper_coloring(two_section(g), inv.chi.coloring, inv.chi.colors));
}

}  // namespace

TEST_CASE("golden invariants of the built-in instances") {
  const std::vector<const char*> texts{kLoops5, kSharp, kEx42, kSingle5, kEx55, kEx62};
  const std::vector<int> alpha{5, 1, 1, 1, 1, 1};
  const std::vector<int> chi{1, 4, 4, 5, 3, 3};
  for (std::size_t k = 0; k < texts.size(); ++k) {
    CAPTURE(k);
    const auto g = parse_ohg(texts[k]);
    const auto inv = invariants(g);
    CHECK(inv.alpha.size == alpha[k]);
    CHECK(inv.chi.colors == chi[k]);
    CHECK(chromatic_number_exhaustive(two_section(g)) == chi[k]);
    check_witnesses(g, inv);
  }
}

TEST_CASE("weak independence exceeds independence through sign cancellation") {
  const auto g = parse_ohg(kEx42);
  CHECK(independence_number(g).size == 1);
  const auto w = weak_independence_number(g);
  CHECK(w.size == 2);
  CHECK(w.vertices == std::vector<int>{0, 1});
  CHECK(weak_independence_number(parse_ohg(kEx55)).size == 2);
  CHECK(weak_independence_number(parse_ohg(kEx62)).size == 2);
}

TEST_CASE("independence edge cases") {
  CHECK(independence_number(parse_ohg(kLoops5)).size == 5);
  CHECK(independence_number(parse_ohg(kSingle5)).size == 1);
  CHECK(independence_number(parse_ohg("vertices 1\nedge +1")).size == 1);
}

TEST_CASE("clique number") {
  CHECK(clique_number(parse_ohg(kEx55)).size == 3);
  CHECK(clique_number(parse_ohg(kLoops5)).size == 1);
  CHECK(clique_number(parse_ohg(kSingle5)).size == 5);
  const auto c5 = parse_ohg("vertices 5\nedge +1 -2\nedge +2 -3\nedge +3 -4\nedge +4 -5\nedge +5 -1");
  CHECK(clique_number(c5).size == 2);
  CHECK(chromatic_number(c5).colors == 3);
}

TEST_CASE("chromatic number and lexicographically first colouring") {
  const auto c = chromatic_number(parse_ohg(kEx62));
  CHECK(c.colors == 3);
  CHECK(c.coloring == std::vector<int>{1, 2, 3});
  const auto loops = chromatic_number(parse_ohg(kLoops5));
  CHECK(loops.coloring == std::vector<int>{1, 1, 1, 1, 1});
  const auto path = chromatic_number(parse_ohg("vertices 4\nedge +1 -2\nedge +2 -3\nedge +3 -4"));
  CHECK(path.coloring == std::vector<int>{1, 2, 1, 2});
  CHECK_FALSE(first_coloring(two_section(parse_ohg(kEx55)), 2).has_value());
}

TEST_CASE("certificate checks reject bad witnesses") {
  const auto g = parse_ohg(kEx62);
  CHECK_FALSE(is_independent(g, std::vector<int>{0, 2}));
  CHECK_FALSE(is_weakly_independent(adjacency_matrix(g), std::vector<int>{0, 2}));
  CHECK(is_weakly_independent(adjacency_matrix(g), std::vector<int>{0, 1}));
  const auto pairs = two_section(g);
  CHECK_FALSE(is_clique(pairs, std::vector<int>{0, 0}));
  CHECK_FALSE(is_proper_coloring(pairs, std::vector<int>{1, 1, 2}, 2));
  CHECK_FALSE(is_proper_coloring(pairs, std::vector<int>{1, 2, 3}, 4));
  CHECK_FALSE(is_proper_coloring(pairs, std::vector<int>{1, 2}, 2));
  CHECK(is_proper_coloring(pairs, std::vector<int>{3, 1, 2}, 3));
}

TEST_CASE("oracle equivalence on random instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CAPTURE(seed);
    const auto g = random_instance(seed);
    const auto inv = invariants(g);
    CHECK(inv.alpha.size == oracle::alpha(g));
    CHECK(inv.alpha_w.size == oracle::alpha_w(g));
    CHECK(inv.omega.size == oracle::omega(g));
    CHECK(inv.chi.colors == oracle::chi(g));
    const auto pairs = two_section(g);
    CHECK(inv.chi.colors == chromatic_number_exhaustive(pairs));
    CHECK(inv.chi.colors == chromatic_number_subset_dp(pairs));
    CHECK(max_clique_exhaustive(pairs).vertices == inv.omega.vertices);
    check_witnesses(g, inv);
  }
}

TEST_CASE("property: invariant chains") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_instance(seed * 31 + 5);
    const auto inv = invariants(g);
    CHECK(inv.alpha.size <= inv.alpha_w.size);
    CHECK(inv.omega.size <= inv.chi.colors);
    CHECK(inv.chi.colors <= g.vertex_count());
  }
}

TEST_CASE("larger graphs: branch and bound against subset DP") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 12 + static_cast<int>(seed % 5);
    const auto g = random_graph(n, n + static_cast<int>(seed % 20), seed);
    const auto pairs = two_section(g);
    CHECK(chromatic_number_dsatur(pairs) == chromatic_number_subset_dp(pairs));
    CHECK(max_clique(pairs).size == max_clique_exhaustive(pairs).size);
  }
}

TEST_CASE("oracle size limits") {
  PairGraph big(21);
  CHECK_THROWS_AS(chromatic_number_subset_dp(big), std::invalid_argument);
  CHECK_THROWS_AS(chromatic_number_exhaustive(PairGraph(11)), std::invalid_argument);
  CHECK_THROWS_AS(max_clique_exhaustive(PairGraph(25)), std::invalid_argument);
}
