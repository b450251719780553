#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ohg {

// ---------------------------------------------------------------- Hyperedge

Hyperedge::Hyperedge(std::vector<Incidence> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("empty hyperedge");
  std::sort(members_.begin(), members_.end(),
            [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
  for (std::size_t k = 1; k < members_.size(); ++k) {
    if (members_[k].vertex == members_[k - 1].vertex) {
      throw std::invalid_argument("vertex " + std::to_string(members_[k].vertex + 1) +
                                  " repeated in hyperedge");
    }
  }
}

int Hyperedge::inputs() const {
  return static_cast<int>(std::count_if(members_.begin(), members_.end(),
                                        [](const Incidence& x) { return x.sign == Sign::In; }));
}

int Hyperedge::outputs() const { return static_cast<int>(members_.size()) - inputs(); }

bool Hyperedge::contains(int v) const { return sign_of(v).has_value(); }

std::optional<Sign> Hyperedge::sign_of(int v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v,
                             [](const Incidence& x, int id) { return x.vertex < id; });
  if (it == members_.end() || it->vertex != v) return std::nullopt;
  return it->sign;
}

std::uint64_t Hyperedge::vertex_mask() const {
  std::uint64_t mask = 0;
  for (const auto& x : members_) mask |= std::uint64_t{1} << x.vertex;
  return mask;
}

// ------------------------------------------------------- OrientedHypergraph

OrientedHypergraph::OrientedHypergraph(int vertex_count, std::vector<Hyperedge> edges)
    : n_(vertex_count), edges_(std::move(edges)), degrees_(std::max(vertex_count, 0), 0) {
  if (n_ < 1) throw ModelError("vertex count must be at least 1");
  if (n_ > kMaxVertices) {
    throw ModelError("vertex count " + std::to_string(n_) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
  for (const auto& h : edges_) {
    if (h.size() == 0) throw ModelError("empty hyperedge");
    for (const auto& x : h.members()) {
      if (x.vertex < 0 || x.vertex >= n_) {
        throw ModelError("vertex id " + std::to_string(x.vertex + 1) + " out of range 1.." +
                         std::to_string(n_));
      }
      ++degrees_[x.vertex];
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (degrees_[v] == 0) throw ModelError("vertex " + std::to_string(v + 1) + " has degree zero");
  }
}

// ---------------------------------------------------------------- PairGraph

PairGraph::PairGraph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("pair graph size out of range");
}

void PairGraph::add(int i, int j) {
  if (i == j) return;
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

bool PairGraph::empty() const {
  return std::all_of(adj_.begin(), adj_.end(), [](std::uint64_t a) { return a == 0; });
}

std::size_t PairGraph::pair_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

std::vector<std::pair<int, int>> PairGraph::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

PairGraph PairGraph::complement() const {
  PairGraph c(n_);
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (int i = 0; i < n_; ++i) c.adj_[i] = all & ~adj_[i] & ~(std::uint64_t{1} << i);
  return c;
}

PairGraph PairGraph::induced(std::span<const int> subset) const {
  PairGraph sub(static_cast<int>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (has(subset[a], subset[b])) sub.add(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return sub;
}

// -------------------------------------------------------------- OHG format

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos > start) out.push_back(s.substr(start, pos - start));
  }
  return out;
}

std::optional<long> to_long(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

OrientedHypergraph parse_ohg(std::string_view text) {
  std::optional<int> n;
  std::vector<Hyperedge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "vertices") {
        throw ModelError("expected 'vertices <n>'", line_no);
      }
      auto value = to_long(tokens[1]);
      if (!value || *value < 1) throw ModelError("vertex count must be a positive integer", line_no);
      if (*value > kMaxVertices) {
        throw ModelError("vertex count exceeds the supported maximum of " +
                             std::to_string(kMaxVertices),
                         line_no);
      }
      n = static_cast<int>(*value);
      continue;
    }
    if (tokens[0] != "edge") {
      throw ModelError("expected 'edge <+v|-v> ...', got '" + std::string(tokens[0]) + "'", line_no);
    }
    if (tokens.size() < 2) throw ModelError("empty hyperedge", line_no);
    std::vector<Incidence> members;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto tok = tokens[k];
      if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
        throw ModelError("bad incidence token '" + std::string(tok) + "'", line_no);
      }
      auto value = to_long(tok.substr(1));
      if (!value) throw ModelError("bad vertex id in '" + std::string(tok) + "'", line_no);
      if (*value < 1 || *value > *n) {
        throw ModelError("vertex id " + std::to_string(*value) + " out of range 1.." +
                             std::to_string(*n),
                         line_no);
      }
      members.push_back({static_cast<int>(*value) - 1, tok[0] == '+' ? Sign::In : Sign::Out});
    }
    try {
      edges.emplace_back(std::move(members));
    } catch (const std::invalid_argument& e) {
      throw ModelError(e.what(), line_no);
    }
  }
  if (!n) throw ModelError("missing 'vertices <n>' header", line_no);
  return OrientedHypergraph(*n, std::move(edges));
}

std::string serialize_ohg(const OrientedHypergraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& h : g.edges()) {
    out << "edge";
    for (const auto& x : h.members()) out << ' ' << (x.sign == Sign::In ? '+' : '-') << x.vertex + 1;
    out << '\n';
  }
  return out.str();
}

// ------------------------------------------------------------- Restriction

Restriction restrict_to(const OrientedHypergraph& g, std::span<const int> subset) {
  std::vector<int> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("restriction to an empty vertex set");
  for (int v : keep) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("restriction vertex out of range");
  }
  std::vector<int> relabel(g.vertex_count(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) relabel[keep[k]] = static_cast<int>(k);

  std::vector<Hyperedge> edges;
  for (const auto& h : g.edges()) {
    std::vector<Incidence> members;
    for (const auto& x : h.members()) {
      if (relabel[x.vertex] >= 0) members.push_back({relabel[x.vertex], x.sign});
    }
    if (!members.empty()) edges.emplace_back(std::move(members));
  }
  return {OrientedHypergraph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

Restriction restrict_to_mask(const OrientedHypergraph& g, std::uint64_t mask) {
  const auto vertices = mask_to_vertices(mask);
  return restrict_to(g, vertices);
}

// ------------------------------------------------------ Structural queries

PairGraph two_section(const OrientedHypergraph& g) {
  PairGraph pairs(g.vertex_count());
  for (const auto& h : g.edges()) {
    const auto members = h.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pairs.add(members[a].vertex, members[b].vertex);
      }
    }
  }
  return pairs;
}

StructuralProfile structural_profile(const OrientedHypergraph& g) {
  StructuralProfile p;
  p.degrees.assign(g.degrees().begin(), g.degrees().end());
  if (std::adjacent_find(p.degrees.begin(), p.degrees.end(), std::not_equal_to<>()) ==
      p.degrees.end()) {
    p.regular_degree = p.degrees.front();
  }
  p.io_balanced = std::all_of(g.edges().begin(), g.edges().end(),
                              [](const Hyperedge& h) { return h.inputs() == h.outputs(); });

  bool graph = true;
  std::set<std::uint64_t> seen;
  for (const auto& h : g.edges()) {
    if (h.size() != 2 || h.inputs() != 1 || !seen.insert(h.vertex_mask()).second) {
      graph = false;
      break;
    }
  }
  p.is_graph = graph;
  return p;
}

// -------------------------------------------------------------- Generators

OrientedHypergraph random_hypergraph(const RandomSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVertices) throw std::invalid_argument("n out of range");
  if (spec.m < 1) throw std::invalid_argument("m must be at least 1");
  if (spec.size_min < 1 || spec.size_min > spec.size_max || spec.size_max > spec.n) {
    throw std::invalid_argument("hyperedge size range must satisfy 1 <= min <= max <= n");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> size_dist(spec.size_min, spec.size_max);
  std::bernoulli_distribution coin(0.5);

  std::vector<int> pool(spec.n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Hyperedge> edges;
  std::vector<bool> covered(spec.n, false);
  for (int e = 0; e < spec.m; ++e) {
    const int size = size_dist(rng);
    // partial Fisher-Yates: the first `size` entries form a uniform subset
    for (int k = 0; k < size; ++k) {
      std::uniform_int_distribution<int> pick(k, spec.n - 1);
      std::swap(pool[k], pool[pick(rng)]);
    }
    std::vector<Incidence> members;
    for (int k = 0; k < size; ++k) {
      members.push_back({pool[k], coin(rng) ? Sign::In : Sign::Out});
      covered[pool[k]] = true;
    }
    edges.emplace_back(std::move(members));
  }
  for (int v = 0; v < spec.n; ++v) {
    if (!covered[v]) edges.emplace_back(std::vector<Incidence>{{v, Sign::In}});
  }
  return OrientedHypergraph(spec.n, std::move(edges));
}

OrientedHypergraph random_graph(int n, int m, std::uint64_t seed) {
  if (n < 2 || n > kMaxVertices) throw std::invalid_argument("graph encodings need 2 <= n <= 64");
  const int max_edges = n * (n - 1) / 2;
  if (m < 1 || m > max_edges) throw std::invalid_argument("edge count out of range for n");
  std::mt19937_64 rng(seed);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<int, int>> chosen;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  // cover every vertex: pair consecutive vertices of a random order
  for (int k = 0; k + 1 < n; k += 2) chosen.insert(key(order[k], order[k + 1]));
  if (n % 2 == 1) {
    std::uniform_int_distribution<int> other(0, n - 2);
    chosen.insert(key(order[n - 1], order[other(rng)]));
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (static_cast<int>(chosen.size()) < m) {
    const int a = vertex(rng);
    const int b = vertex(rng);
    if (a != b) chosen.insert(key(a, b));
  }

  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> oriented;
  for (auto [a, b] : chosen) {
    if (coin(rng)) std::swap(a, b);
    oriented.emplace_back(a, b);
  }
  return graph_encoding(n, oriented);
}

OrientedHypergraph graph_encoding(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Hyperedge> hs;
  hs.reserve(edges.size());
  for (auto [tail, head] : edges) {
    if (tail == head) throw std::invalid_argument("graph encodings have no loops");
    hs.emplace_back(std::vector<Incidence>{{tail, Sign::In}, {head, Sign::Out}});
  }
  return OrientedHypergraph(n, std::move(hs));
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t vertices_to_mask(std::span<const int> vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) mask |= std::uint64_t{1} << v;
  return mask;
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace ohg
