#include "shiftlab/algebraic.hpp"

#include <algorithm>
#include <string>

#include "shiftlab/errors.hpp"
#include "shiftlab/random.hpp"

namespace shiftlab {

namespace {

void require_square(const ExactMatrix& mat, int n) {
  if (mat.rows() != static_cast<std::size_t>(n) || mat.cols() != static_cast<std::size_t>(n)) {
    throw InputError("generic matrix must be n x n with n = " + std::to_string(n));
  }
}

void require_k(int k, int n) {
  if (k < 1 || k > n) {
    throw InputError("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
}

// Fills the row for the pair (i, j): block l gets a_{lj} at i and sign * a_{li} at j.
void fill_pair_row(ExactMatrix& out, std::size_t row, const ExactMatrix& mat, int n, int k,
                   Vertex i, Vertex j, int sign) {
  for (int l = 0; l < k; ++l) {
    const std::size_t base = static_cast<std::size_t>(l) * n;
    out(row, base + (i - 1)) = mat(l, j - 1);
    if (sign > 0) {
      out(row, base + (j - 1)) = mat(l, i - 1);
    } else {
      out(row, base + (j - 1)) = -mat(l, i - 1);
    }
  }
}

// Ranks of the column prefixes of `full` (k blocks of n columns) for
// k = first..last. Once the rank reaches `cap` it cannot grow further.
std::vector<int> prefix_ranks(const ExactMatrix& full, int n, int first, int last, int cap) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(0, last - first + 1)));
  for (int k = first; k <= last; ++k) {
    if (!out.empty() && out.back() == cap) {
      out.push_back(cap);
      continue;
    }
    const auto cols = static_cast<std::size_t>(k) * static_cast<std::size_t>(n);
    out.push_back(static_cast<int>(rank_exact(full.left_columns(cols))));
  }
  return out;
}

std::vector<int> exterior_cumulative(const Graph& g, const ExactMatrix& mat) {
  const int n = g.n();
  if (n < 2) return {};
  return prefix_ranks(exterior_rank_matrix(g, mat, n - 1), n, 1, n - 1,
                      static_cast<int>(g.edge_count()));
}

// m_{<=k} for k = 1..n_profile-1 from s_{k+1} of the ambient (possibly padded)
// graph, whose vertex count is g.n().
std::vector<int> symmetric_cumulative(const Graph& g, const ExactMatrix& mat, int n_profile) {
  const int ambient = g.n();
  if (n_profile < 2) return {};
  const int cap = static_cast<int>(g.edge_count()) + ambient;
  auto s = prefix_ranks(symmetric_rank_matrix(g, mat, n_profile), ambient, 2, n_profile, cap);
  for (int& v : s) v -= ambient;
  return s;
}

template <typename Compute>
MProfile max_over_samples(const Graph& g, const GenericConfig& cfg, int ambient,
                          const char* what, Compute compute) {
  cfg.validate();
  const int n = g.n();
  const int edges = static_cast<int>(g.edge_count());
  std::vector<int> best(static_cast<std::size_t>(std::max(0, n - 1)), 0);
  if (n < 2) return MProfile::from_cumulative(n, best);
  std::string last_problem;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    GenericConfig round = cfg;
    round.bound = cfg.bound << attempt;
    for (int r = 0; r < cfg.repeats; ++r) {
      const auto index = static_cast<std::uint64_t>(attempt) * cfg.repeats + r;
      const auto values = compute(sample_generic_matrix(ambient, round, index));
      for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::max(best[k], values[k]);
    }
    last_problem = profile_violation(n, best);
    if (last_problem.empty() && best.back() != edges) {
      last_problem = "top value " + std::to_string(best.back()) + " != |E| = " +
                     std::to_string(edges);
    }
    if (last_problem.empty()) return MProfile::from_cumulative(n, best);
  }
  throw GenericityError(std::string(what) + " profile failed validation after " +
                        std::to_string(cfg.max_attempts) + " rounds: " + last_problem +
                        " (raise repeats or bound)");
}

}  // namespace

void GenericConfig::validate() const {
  if (bound < 2) throw InputError("GenericConfig: bound must be >= 2");
  if (repeats < 1) throw InputError("GenericConfig: repeats must be >= 1");
  if (pad < 0) throw InputError("GenericConfig: pad must be >= 0");
  if (max_attempts < 1) throw InputError("GenericConfig: max_attempts must be >= 1");
  if (bound > (std::int64_t{1} << 40)) throw InputError("GenericConfig: bound must be <= 2^40");
}

ExactMatrix sample_generic_matrix(int n, const GenericConfig& cfg, std::uint64_t sample_index) {
  cfg.validate();
  Rng rng(derive_seed(cfg.seed, sample_index));
  ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const auto b = static_cast<std::uint64_t>(cfg.bound);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      // 2b equally likely values, 0 excluded.
      const auto draw = static_cast<std::int64_t>(rng.below(2 * b));
      const std::int64_t value = draw < static_cast<std::int64_t>(b)
                                     ? draw - static_cast<std::int64_t>(b)
                                     : draw - static_cast<std::int64_t>(b) + 1;
      m(r, c) = static_cast<long>(value);
    }
  }
  return m;
}

ExactMatrix exterior_rank_matrix(const Graph& g, const ExactMatrix& mat, int k) {
  const int n = g.n();
  require_square(mat, n);
  require_k(k, n);
  ExactMatrix out(g.edge_count(), static_cast<std::size_t>(k) * n);
  std::size_t row = 0;
  for (const Edge& e : g.edges()) fill_pair_row(out, row++, mat, n, k, e.u, e.v, -1);
  return out;
}

ExactMatrix symmetric_rank_matrix(const Graph& g, const ExactMatrix& mat, int k) {
  const int n = g.n();
  require_square(mat, n);
  require_k(k, n);
  ExactMatrix out(g.edge_count() + static_cast<std::size_t>(n), static_cast<std::size_t>(k) * n);
  std::size_t row = 0;
  for (const Edge& e : g.edges()) fill_pair_row(out, row++, mat, n, k, e.u, e.v, +1);
  for (Vertex i = 1; i <= n; ++i, ++row) {
    for (int l = 0; l < k; ++l) {
      out(row, static_cast<std::size_t>(l) * n + (i - 1)) = mat(l, i - 1);
    }
  }
  return out;
}

RankProfile exterior_ranks(const Graph& g, const ExactMatrix& mat) {
  require_square(mat, g.n());
  return RankProfile{ShiftKind::exterior, 1, exterior_cumulative(g, mat)};
}

RankProfile symmetric_ranks(const Graph& g, const ExactMatrix& mat) {
  require_square(mat, g.n());
  RankProfile out{ShiftKind::symmetric, 2, {}};
  if (g.n() < 2) return out;
  const int cap = static_cast<int>(g.edge_count()) + g.n();
  out.values = prefix_ranks(symmetric_rank_matrix(g, mat, g.n()), g.n(), 2, g.n(), cap);
  return out;
}

MProfile exterior_profile(const Graph& g, const GenericConfig& cfg) {
  return max_over_samples(g, cfg, g.n(), "exterior",
                          [&](const ExactMatrix& mat) { return exterior_cumulative(g, mat); });
}

MProfile symmetric_profile(const Graph& g, const GenericConfig& cfg) {
  cfg.validate();
  const Graph ambient = with_isolated_vertices(g, cfg.pad);
  MProfile result = max_over_samples(g, cfg, ambient.n(), "symmetric", [&](const ExactMatrix& mat) {
    return symmetric_cumulative(ambient, mat, g.n());
  });
  if (cfg.pad_check) {
    GenericConfig wider = cfg;
    wider.pad = cfg.pad + 3;
    wider.pad_check = false;
    const MProfile check = symmetric_profile(g, wider);
    if (!(check == result)) {
      throw GenericityError("symmetric profile changed between pad " + std::to_string(cfg.pad) +
                            " and pad " + std::to_string(wider.pad));
    }
  }
  return result;
}

Graph exterior_shift(const Graph& g, const GenericConfig& cfg) {
  return graph_from_profile(exterior_profile(g, cfg));
}

Graph symmetric_shift(const Graph& g, const GenericConfig& cfg) {
  return graph_from_profile(symmetric_profile(g, cfg));
}

Graph algebraic_shift(const Graph& g, ShiftKind kind, const GenericConfig& cfg) {
  return kind == ShiftKind::exterior ? exterior_shift(g, cfg) : symmetric_shift(g, cfg);
}

}  // namespace shiftlab
