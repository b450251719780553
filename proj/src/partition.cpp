#include "ohg/partition.hpp"

#include <bit>
#include <limits>
#include <map>
#include <stdexcept>

namespace ohg {

const char* to_string(PartitionKind kind) { return kind == PartitionKind::Geq ? "geq" : "leq"; }

bool SubsetSpectra::admissible(std::uint64_t mask, double lambda, PartitionKind kind,
                               double eps) const {
  return kind == PartitionKind::Geq ? lo[mask] >= lambda - eps : hi[mask] <= lambda + eps;
}

namespace {

void check_table_size(int n) {
  if (n > kPartitionHardCap) {
    throw std::length_error("subset tables are limited to n <= " +
                            std::to_string(kPartitionHardCap));
  }
}

}  // namespace

SubsetSpectra subset_spectra(const OrientedHypergraph& g) {
  const int n = g.vertex_count();
  check_table_size(n);
  const Eigen::MatrixXd chung = chung_laplacian(g);
  const std::int64_t total = std::int64_t{1} << n;
  SubsetSpectra table{n, std::vector<double>(total, 0.0), std::vector<double>(total, 0.0)};

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t mask = 1; mask < total; ++mask) {
    const auto vertices = mask_to_vertices(static_cast<std::uint64_t>(mask));
    const auto size = static_cast<Eigen::Index>(vertices.size());
    if (size == 1) {
      table.lo[mask] = table.hi[mask] = 1.0;
      continue;
    }
    Eigen::MatrixXd sub(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
      for (Eigen::Index b = 0; b < size; ++b) sub(a, b) = chung(vertices[a], vertices[b]);
    }
    const auto eig = jacobi_eigen(sub);
    table.lo[mask] = eig.values(0);
    table.hi[mask] = eig.values(size - 1);
  }
  return table;
}

SubsetSpectra subset_spectra_serial(const OrientedHypergraph& g) {
  const int n = g.vertex_count();
  check_table_size(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  SubsetSpectra table{n, std::vector<double>(total, 0.0), std::vector<double>(total, 0.0)};
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const auto restricted = restrict_to_mask(g, mask);
    const auto s = spectrum(restricted.graph);
    table.lo[mask] = s.lambda_min();
    table.hi[mask] = s.lambda_max();
  }
  return table;
}

bool admissible(const OrientedHypergraph& g, std::span<const int> subset, double lambda,
                PartitionKind kind, double eps) {
  const auto restricted = restrict_to(g, subset);
  const auto s = spectrum(restricted.graph);
  return kind == PartitionKind::Geq ? s.lambda_min() >= lambda - eps
                                    : s.lambda_max() <= lambda + eps;
}

void check_partition_lambda(double lambda, PartitionKind kind) {
  if (kind == PartitionKind::Geq && !(lambda <= 1.0)) {
    throw std::domain_error("N_geq(lambda) is only defined for lambda <= 1");
  }
  if (kind == PartitionKind::Leq && !(lambda >= 1.0)) {
    throw std::domain_error("N_leq(lambda) is only defined for lambda >= 1");
  }
}

PartitionResult partition_number(const SubsetSpectra& table, double lambda, PartitionKind kind,
                                 double eps) {
  check_partition_lambda(lambda, kind);
  const int n = table.n;
  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint8_t kUnreachable = std::numeric_limits<std::uint8_t>::max();

  std::vector<std::uint8_t> ok(total, 0);
  for (std::uint64_t s = 1; s < total; ++s) ok[s] = table.admissible(s, lambda, kind, eps);

  // best[mask] = fewest admissible parts covering mask; each step removes a
  // part containing the lowest vertex of what is left
  std::vector<std::uint8_t> best(total, kUnreachable);
  best[0] = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t rest = mask & ~low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t part = sub | low;
      if (ok[part] && best[mask & ~part] != kUnreachable) {
        best[mask] = std::min<std::uint8_t>(best[mask], best[mask & ~part] + 1);
      }
      if (sub == 0) break;
    }
  }

  PartitionResult out;
  out.lambda = lambda;
  out.kind = kind;
  std::uint64_t mask = total - 1;
  if (best[mask] == kUnreachable) throw std::logic_error("no admissible partition exists");
  out.k = best[mask];
  while (mask != 0) {
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t rest = mask & ~low;
    std::uint64_t chosen = 0;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t part = sub | low;
      if (ok[part] && best[mask & ~part] + 1 == best[mask] &&
          (chosen == 0 || mask_lex_less(part, chosen))) {
        chosen = part;
      }
      if (sub == 0) break;
    }
    out.parts.push_back(mask_to_vertices(chosen));
    out.per_part_extremes.emplace_back(table.lo[chosen], table.hi[chosen]);
    mask &= ~chosen;
  }
  return out;
}

PartitionResult partition_number(const OrientedHypergraph& g, double lambda, PartitionKind kind,
                                 double eps) {
  check_partition_lambda(lambda, kind);
  return partition_number(subset_spectra(g), lambda, kind, eps);
}

int partition_number_exhaustive(const OrientedHypergraph& g, double lambda, PartitionKind kind,
                                double eps) {
  check_partition_lambda(lambda, kind);
  const int n = g.vertex_count();
  if (n > 10) throw std::length_error("exhaustive partition search limited to n <= 10");

  std::map<std::uint64_t, bool> cache;
  auto part_ok = [&](std::uint64_t mask) {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    const bool ok = admissible(g, mask_to_vertices(mask), lambda, kind, eps);
    cache.emplace(mask, ok);
    return ok;
  };

  // restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i))
  std::vector<int> block(n, 0);
  std::vector<int> prefix_max(n, 0);
  int best = std::numeric_limits<int>::max();
  while (true) {
    const int blocks = prefix_max[n - 1] + 1;
    if (blocks < best) {
      std::vector<std::uint64_t> parts(blocks, 0);
      for (int i = 0; i < n; ++i) parts[block[i]] |= std::uint64_t{1} << i;
      bool all_ok = true;
      for (auto p : parts) {
        if (!part_ok(p)) {
          all_ok = false;
          break;
        }
      }
      if (all_ok) best = blocks;
    }
    int i = n - 1;
    while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (int j = i + 1; j < n; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return best;
}

}  // namespace ohg
