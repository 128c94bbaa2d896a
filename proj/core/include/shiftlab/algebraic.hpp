#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/exact_matrix.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

/// Controls the Monte Carlo surrogate for a generic matrix.
///
/// Matrix entries are drawn uniformly from [-bound, bound] \ {0} using a stream
/// derived from (seed, sample index). A rank profile is the entrywise maximum
/// over `repeats` samples. Ranks of these matrices are polynomial conditions
/// in the entries, so a sample can only under-estimate the generic rank, and
/// does so with probability at most deg / (2 * bound) per minor
/// (Schwartz-Zippel). The resulting profile is then validated as a legal
/// shifted-graph profile; on failure the bound is doubled and fresh samples
/// are drawn, up to `max_attempts` times.
struct GenericConfig {
  std::uint64_t seed = 0x5eed5eed5eedULL;
  std::int64_t bound = 1 << 16;
  int repeats = 3;
  /// Extra isolated vertices appended before the symmetric computation.
  int pad = 0;
  /// Recompute the symmetric profile at pad + 3 and require equality.
  bool pad_check = false;
  int max_attempts = 4;

  /// Throws InputError unless bound >= 2, repeats >= 1, pad >= 0.
  void validate() const;
};

enum class ShiftKind { exterior, symmetric };

/// Raw generic ranks: exterior holds r_k for k = 1..n-1, symmetric holds s_k
/// for k = 2..n (both indexed from `first_k`).
struct RankProfile {
  ShiftKind kind = ShiftKind::exterior;
  int first_k = 1;
  std::vector<int> values;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// n x n matrix with entries in [-bound, bound] \ {0}, deterministic in
/// (cfg.seed, sample_index).
ExactMatrix sample_generic_matrix(int n, const GenericConfig& cfg, std::uint64_t sample_index);

/// |E| x (k n) matrix. The row for edge {i, j} (i < j) carries, in column
/// block l = 1..k, a_{lj} at position i and -a_{li} at position j, where
/// a_{st} = mat(s, t) (1-indexed). mat must be n x n; 1 <= k <= n.
ExactMatrix exterior_rank_matrix(const Graph& g, const ExactMatrix& mat, int k);

/// (|E| + n) x (k n) matrix: edge rows as above with both signs positive,
/// followed by one diagonal row per vertex i carrying a_{li} at position i of
/// block l. (The literal diagonal vector is twice that; the scalar does not
/// change the span.)
ExactMatrix symmetric_rank_matrix(const Graph& g, const ExactMatrix& mat, int k);

/// r_k for k = 1..n-1 at one fixed matrix.
RankProfile exterior_ranks(const Graph& g, const ExactMatrix& mat);
/// s_k for k = 2..n at one fixed matrix.
RankProfile symmetric_ranks(const Graph& g, const ExactMatrix& mat);

/// m_{<=k} of the exterior shift: generic r_k, k = 1..n-1.
MProfile exterior_profile(const Graph& g, const GenericConfig& cfg = {});
/// m_{<=k} of the symmetric shift: generic s_{k+1} - n' for k = 1..n-1, where
/// n' = n + cfg.pad is the ambient vertex count of the matrix computation.
MProfile symmetric_profile(const Graph& g, const GenericConfig& cfg = {});

Graph exterior_shift(const Graph& g, const GenericConfig& cfg = {});
Graph symmetric_shift(const Graph& g, const GenericConfig& cfg = {});

Graph algebraic_shift(const Graph& g, ShiftKind kind, const GenericConfig& cfg = {});

}  // namespace shiftlab
