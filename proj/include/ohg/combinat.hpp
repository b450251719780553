#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

/// A vertex set realising an extremal size; vertices are 0-based, ascending.
struct SetWitness {
  int size = 0;
  std::vector<int> vertices;
};

/// A proper colouring with `colors` colours; coloring[v] is in 1..colors.
struct ColoringWitness {
  int colors = 0;
  std::vector<int> coloring;
};

struct InvariantSet {
  SetWitness alpha;
  SetWitness alpha_w;
  SetWitness omega;
  ColoringWitness chi;
};

// Exact solvers. Witnesses are the lexicographically smallest optimum.

/// Largest U with #(U ∩ h) <= 1 for every hyperedge.
SetWitness independence_number(const OrientedHypergraph& g);
/// Largest U with A_ij == 0 for all distinct i, j in U.
SetWitness weak_independence_number(const OrientedHypergraph& g);
/// Largest U whose pairs are all co-contained in some hyperedge.
SetWitness clique_number(const OrientedHypergraph& g);
/// Fewest colours with co-contained vertices coloured differently.
ColoringWitness chromatic_number(const OrientedHypergraph& g);

InvariantSet invariants(const OrientedHypergraph& g);

/// Branch and bound with greedy-colouring bounds; lexicographically
/// smallest maximum clique.
SetWitness max_clique(const PairGraph& g);
/// Number of colours of an optimal DSATUR branch and bound.
int chromatic_number_dsatur(const PairGraph& g);
/// Lexicographically smallest proper colouring with exactly k colours, if any.
std::optional<std::vector<int>> first_coloring(const PairGraph& g, int k);

// Reference solvers used as oracles.

/// Exhaustive scan of all 2^n subsets; n <= 24.
SetWitness max_clique_exhaustive(const PairGraph& g);
/// Minimum cover by independent sets, dynamic programming over subsets; n <= 20.
int chromatic_number_subset_dp(const PairGraph& g);
/// Enumerates all k^n colourings for increasing k; n <= 10.
int chromatic_number_exhaustive(const PairGraph& g);

// Certificate checks.

bool is_independent(const OrientedHypergraph& g, std::span<const int> u);
bool is_weakly_independent(const Eigen::MatrixXi& adjacency, std::span<const int> u);
bool is_clique(const PairGraph& pairs, std::span<const int> u);
bool is_proper_coloring(const PairGraph& pairs, std::span<const int> coloring, int colors);

}  // namespace ohg
