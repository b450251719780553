#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ohg {

/// Largest vertex count supported by the model. Pair sets are stored as
/// one 64-bit neighbour mask per vertex.
inline constexpr int kMaxVertices = 64;

enum class Sign : std::int8_t { In = 1, Out = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::In ? Sign::Out : Sign::In; }

/// One vertex-hyperedge incidence. Vertex ids are 0-based internally.
struct Incidence {
  int vertex;
  Sign sign;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// A hyperedge: incidences sorted by vertex id, each vertex at most once.
class Hyperedge {
 public:
  Hyperedge() = default;
  /// Sorts the incidences. Throws std::invalid_argument if empty or if a vertex repeats.
  explicit Hyperedge(std::vector<Incidence> members);

  std::span<const Incidence> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int inputs() const;
  int outputs() const;
  bool contains(int v) const;
  /// Sign of v in this hyperedge, or nullopt if v is not incident.
  std::optional<Sign> sign_of(int v) const;
  std::uint64_t vertex_mask() const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;

 private:
  std::vector<Incidence> members_;
};

/// Raised by the model validator; carries the offending line when parsing.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Oriented hypergraph on vertices 0..n-1 with an ordered multiset of
/// hyperedges. Immutable once constructed; every vertex has degree >= 1.
class OrientedHypergraph {
 public:
  /// Validates and builds. Throws ModelError on any invariant violation.
  OrientedHypergraph(int vertex_count, std::vector<Hyperedge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Hyperedge> edges() const { return edges_; }
  const Hyperedge& edge(std::size_t k) const { return edges_[k]; }
  int degree(int v) const { return degrees_[v]; }
  std::span<const int> degrees() const { return degrees_; }

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  int n_;
  std::vector<Hyperedge> edges_;
  std::vector<int> degrees_;
};

/// Unordered vertex pairs over 0..n-1, as symmetric neighbour masks.
class PairGraph {
 public:
  explicit PairGraph(int n);

  int vertex_count() const { return n_; }
  void add(int i, int j);
  bool has(int i, int j) const { return (adj_[i] >> j) & 1U; }
  std::uint64_t neighbours(int i) const { return adj_[i]; }
  bool empty() const;
  std::size_t pair_count() const;
  /// Pairs (i, j) with i < j in ascending order.
  std::vector<std::pair<int, int>> pairs() const;
  PairGraph complement() const;
  /// Pairs of this graph with both ends in `subset`, relabelled by position.
  PairGraph induced(std::span<const int> subset) const;

  friend bool operator==(const PairGraph&, const PairGraph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

struct StructuralProfile {
  std::vector<int> degrees;
  std::optional<int> regular_degree;
  bool io_balanced = false;
  bool is_graph = false;
};

/// Γ restricted to a vertex subset together with the relabelling map:
/// vertex k of `graph` is vertex `to_parent[k]` of the original.
struct Restriction {
  OrientedHypergraph graph;
  std::vector<int> to_parent;
};

/// Parses OHG text. Vertex ids in the text are 1-based.
OrientedHypergraph parse_ohg(std::string_view text);
std::string serialize_ohg(const OrientedHypergraph& g);

/// `subset` holds 0-based vertex ids; order and duplicates are ignored.
Restriction restrict_to(const OrientedHypergraph& g, std::span<const int> subset);
Restriction restrict_to_mask(const OrientedHypergraph& g, std::uint64_t mask);

PairGraph two_section(const OrientedHypergraph& g);
StructuralProfile structural_profile(const OrientedHypergraph& g);

struct RandomSpec {
  int n = 1;
  int m = 1;
  int size_min = 1;
  int size_max = 1;
  std::uint64_t seed = 0;
};

/// Uniform edge sizes, uniform vertex subsets, independent fair signs;
/// degree-zero vertices are patched with trailing singleton hyperedges.
OrientedHypergraph random_hypergraph(const RandomSpec& spec);

/// Random simple graph encoding (one input, one output per edge, no
/// repeated vertex pairs, no isolated vertices). Needs n >= 2; the edge
/// count is raised to ceil(n/2) when m is too small to cover every vertex.
OrientedHypergraph random_graph(int n, int m, std::uint64_t seed);

/// Encodes a simple graph on n vertices; each pair (i, j) becomes an edge
/// with i as input and j as output.
OrientedHypergraph graph_encoding(int n, std::span<const std::pair<int, int>> edges);

std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(std::span<const int> vertices);
/// Lexicographic order of the ascending vertex lists of two masks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b);

}  // namespace ohg
