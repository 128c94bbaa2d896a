#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

/// Vertices are 1-indexed: a graph on n vertices lives on {1, ..., n}.
using Vertex = int;

/// Upper bound on n accepted by Graph (the adjacency matrix is dense).
inline constexpr int kMaxVertices = 4096;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on [n]: no loops, no multi-edges.
///
/// Edges are kept sorted lexicographically so two graphs compare equal exactly
/// when their edge sets agree. An adjacency matrix is kept alongside for O(1)
/// membership queries. Values are immutable after construction.
class Graph {
 public:
  /// Builds a normalized graph. Pairs may be given in either orientation and
  /// may repeat; loops, out-of-range endpoints and n < 1 throw InputError.
  Graph(int n, std::span<const std::pair<int, int>> pairs);
  Graph(int n, std::initializer_list<std::pair<int, int>> pairs);
  Graph(int n, std::span<const Edge> edges);

  static Graph edgeless(int n);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges, bool normalized);

  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

/// Same as the Graph constructor; kept as a free function for symmetry with
/// the other constructors below.
Graph new_graph(int n, std::span<const std::pair<int, int>> pairs);

Graph complete_graph(int n);
/// K_{a,b} with parts {1..a} and {a+1..a+b}.
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Appends `extra` isolated vertices n+1, ..., n+extra.
Graph with_isolated_vertices(const Graph& g, int extra);
/// Removes v and relabels the remaining vertices order-preservingly onto [n-1].
Graph delete_vertex(const Graph& g, Vertex v);
/// True when every edge of `a` is an edge of `b` (same vertex count required).
bool is_edge_subset(const Graph& a, const Graph& b);
int non_isolated_count(const Graph& g);

/// Cumulative edge profile of a shifted graph: cum[k-1] = m_{<=k}, the number of
/// edges whose smaller endpoint is at most k, for k = 1..n-1.
class MProfile {
 public:
  /// Validates: nondecreasing, increments m_k strictly decrease while positive
  /// and then stay zero, and m_k <= n - k.
  static MProfile from_cumulative(int n, std::vector<int> cumulative);
  /// Same as from_cumulative but from the increments m_1..m_{n-1}.
  static MProfile from_increments(int n, std::span<const int> increments);

  int n() const { return n_; }
  const std::vector<int>& cumulative() const { return cum_; }
  /// m_{<=k}; k = 0 gives 0.
  int at_most(int k) const;
  /// m_k.
  int increment(int k) const;
  int total() const { return cum_.empty() ? 0 : cum_.back(); }

  friend bool operator==(const MProfile&, const MProfile&) = default;

 private:
  MProfile(int n, std::vector<int> cum) : n_(n), cum_(std::move(cum)) {}

  int n_ = 1;
  std::vector<int> cum_;
};

/// Returns an empty string when the vector is a legal profile, otherwise a
/// description of the first violated condition.
std::string profile_violation(int n, std::span<const int> cumulative);

bool is_shifted(const Graph& g);
/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool same_component(const Graph& g, Vertex a, Vertex b);

/// Vertex k-connectivity by exhaustive deletion of every (k-1)-subset:
/// n > k and g minus any k-1 vertices stays connected. Throws GuardExceeded
/// when the number of deletion sets exceeds 2^20.
bool is_k_connected(const Graph& g, int k);

/// |T_k(g)|: number of k-vertex cliques. t_count(g, 1) = n; 0 for k > n.
std::uint64_t t_count(const Graph& g, int k);

/// Requires is_shifted(g); throws InputError otherwise.
MProfile m_profile(const Graph& g);
/// The unique shifted graph with edges {i, j}, i < j <= i + m_i.
Graph graph_from_profile(const MProfile& p);

/// beta_{i,i+2} of the ideal generated by x_a x_b over non-edges {a, b},
/// via the component-count formula: sum over (i+2)-subsets W of
/// (components of g[W]) - 1. Requires 0 <= i <= n-2 and n <= 14.
std::uint64_t betti_hochster(const Graph& g, int i);

/// Vertices adjacent to every other non-isolated vertex.
std::vector<Vertex> star_vertices(const Graph& g);

/// sigma[v-1] is the image of v. Throws InputError unless sigma is a
/// bijection of [n].
Graph apply_permutation(const Graph& g, std::span<const Vertex> sigma);

}  // namespace shiftlab
