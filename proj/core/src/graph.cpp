#include "shiftlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

std::vector<Edge> normalize_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 1) {
    throw InputError("graph must have at least one vertex, got n = " + std::to_string(n));
  }
  if (n > kMaxVertices) {
    throw InputError("graph has too many vertices (max " + std::to_string(kMaxVertices) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) {
      throw InputError("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} has an endpoint outside [1," + std::to_string(n) + "]");
    }
    edges.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::pair<int, int>> as_pairs(std::span<const Edge> edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

// Bitmask adjacency for the small-n brute-force routines.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
    rows[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
  }
  return rows;
}

int component_count(const std::vector<std::uint64_t>& rows, std::uint64_t vertices) {
  int count = 0;
  while (vertices != 0) {
    std::uint64_t frontier = vertices & (~vertices + 1);
    std::uint64_t seen = frontier;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= rows[static_cast<std::size_t>(__builtin_ctzll(f))];
      }
      next &= vertices & ~seen;
      seen |= next;
      frontier = next;
    }
    vertices &= ~seen;
    ++count;
  }
  return count;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs)
    : Graph(n, normalize_pairs(n, pairs), true) {}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> pairs)
    : Graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n, as_pairs(edges)) {}

Graph::Graph(int n, std::vector<Edge> edges, bool /*normalized*/)
    : n_(n), edges_(std::move(edges)),
      adjacency_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u - 1) * n_ + (e.v - 1)] = 1;
    adjacency_[static_cast<std::size_t>(e.v - 1) * n_ + (e.u - 1)] = 1;
  }
}

Graph Graph::edgeless(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  return adjacency_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)] != 0;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (Vertex u = 1; u <= n_; ++u) d += has_edge(v, u) ? 1 : 0;
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= n_; ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

Graph new_graph(int n, std::span<const std::pair<int, int>> pairs) { return Graph(n, pairs); }

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) pairs.emplace_back(i, j);
  return Graph(a + b, pairs);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  if (n >= 3) pairs.emplace_back(1, n);
  return Graph(n, pairs);
}

Graph with_isolated_vertices(const Graph& g, int extra) {
  if (extra < 0) throw InputError("padding must be nonnegative");
  return Graph(g.n() + extra, std::span<const Edge>(g.edges()));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 1 || v > g.n()) throw InputError("delete_vertex: vertex out of range");
  if (g.n() == 1) throw InputError("delete_vertex: cannot delete the only vertex");
  auto relabel = [v](Vertex x) { return x < v ? x : x - 1; };
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) pairs.emplace_back(relabel(e.u), relabel(e.v));
  }
  return Graph(g.n() - 1, pairs);
}

bool is_edge_subset(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  return std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end());
}

int non_isolated_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 1; v <= g.n(); ++v) count += g.degree(v) > 0 ? 1 : 0;
  return count;
}

std::string profile_violation(int n, std::span<const int> cum) {
  if (n < 1) return "n must be positive";
  if (static_cast<int>(cum.size()) != n - 1) {
    return "profile length " + std::to_string(cum.size()) + " != n-1 = " + std::to_string(n - 1);
  }
  int prev_cum = 0;
  int prev_inc = -1;
  for (int k = 1; k <= n - 1; ++k) {
    int inc = cum[k - 1] - prev_cum;
    std::ostringstream where;
    where << " at k=" << k;
    if (inc < 0) return "profile decreases" + where.str();
    if (inc > n - k) return "m_k exceeds n-k" + where.str();
    if (prev_inc >= 0 && inc > 0 && inc >= prev_inc) {
      return "increments not strictly decreasing" + where.str();
    }
    if (prev_inc == 0 && inc > 0) return "positive increment after a zero" + where.str();
    prev_cum = cum[k - 1];
    prev_inc = inc;
  }
  return {};
}

MProfile MProfile::from_cumulative(int n, std::vector<int> cumulative) {
  if (auto why = profile_violation(n, cumulative); !why.empty()) {
    throw InputError("invalid m-profile: " + why);
  }
  return MProfile(n, std::move(cumulative));
}

MProfile MProfile::from_increments(int n, std::span<const int> increments) {
  std::vector<int> cum(increments.size());
  std::partial_sum(increments.begin(), increments.end(), cum.begin());
  return from_cumulative(n, std::move(cum));
}

int MProfile::at_most(int k) const {
  if (k <= 0) return 0;
  if (k > static_cast<int>(cum_.size())) return total();
  return cum_[k - 1];
}

int MProfile::increment(int k) const { return at_most(k) - at_most(k - 1); }

bool is_shifted(const Graph& g) {
  // Lowering one endpoint by one step at a time generates all required edges,
  // so it suffices to check the two unit moves of every edge.
  for (const Edge& e : g.edges()) {
    if (e.u > 1 && !g.has_edge(e.u - 1, e.v)) return false;
    if (e.v - 1 > e.u && !g.has_edge(e.u, e.v - 1)) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  const int n = g.n();
  // Maximum cardinality search: order[t] is the t-th visited vertex. The
  // reverse visit order is a perfect elimination ordering iff g is chordal.
  std::vector<int> weight(n + 1, 0);
  std::vector<bool> visited(n + 1, false);
  std::vector<int> position(n + 1, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int t = 0; t < n; ++t) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!visited[v] && (best == 0 || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    position[best] = t;
    order.push_back(best);
    for (Vertex u : g.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }
  // Eliminating in reverse visit order, each vertex's earlier-visited neighbors
  // must form a clique; it suffices that all of them are adjacent to the latest
  // visited one among them.
  for (Vertex v : order) {
    Vertex parent = 0;
    std::vector<Vertex> earlier;
    for (Vertex u : g.neighbors(v)) {
      if (position[u] < position[v]) {
        earlier.push_back(u);
        if (parent == 0 || position[u] > position[parent]) parent = u;
      }
    }
    for (Vertex u : earlier) {
      if (u != parent && !g.has_edge(u, parent)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> label(g.n() + 1, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> part{s};
    label[s] = static_cast<int>(parts.size());
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex u : g.neighbors(part[head])) {
        if (label[u] < 0) {
          label[u] = label[s];
          part.push_back(u);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.n() + 1, -1);
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : g.neighbors(v)) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          queue.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool same_component(const Graph& g, Vertex a, Vertex b) {
  for (const auto& part : connected_components(g)) {
    bool has_a = std::binary_search(part.begin(), part.end(), a);
    bool has_b = std::binary_search(part.begin(), part.end(), b);
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw InputError("connectivity order k must be at least 1");
  const int n = g.n();
  if (n <= k) return false;
  if (n > 64) throw GuardExceeded("is_k_connected supports n <= 64");
  if (binomial(n, k - 1) > (std::uint64_t{1} << 20)) {
    throw GuardExceeded("is_k_connected: too many (k-1)-subsets to enumerate");
  }
  const auto rows = adjacency_masks(g);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Walk all (k-1)-subsets in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k - 1));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t removed = 0;
    for (int p : pick) removed |= std::uint64_t{1} << p;
    if (component_count(rows, all & ~removed) != 1) return false;
    int pos = k - 2;
    while (pos >= 0 && pick[pos] == n - (k - 1) + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < k - 1; ++q) pick[q] = pick[q - 1] + 1;
  }
  return true;
}

std::uint64_t t_count(const Graph& g, int k) {
  if (k < 1) throw InputError("t_count requires k >= 1");
  if (k > g.n()) return 0;
  if (k == 1) return static_cast<std::uint64_t>(g.n());
  std::uint64_t count = 0;
  std::vector<Vertex> clique;
  // Extend cliques with strictly increasing vertices so each is counted once.
  auto extend = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(clique.size()) == k) {
      ++count;
      return;
    }
    for (Vertex v = from; v <= g.n(); ++v) {
      bool ok = std::all_of(clique.begin(), clique.end(),
                            [&](Vertex c) { return g.has_edge(c, v); });
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 1);
  return count;
}

MProfile m_profile(const Graph& g) {
  if (!is_shifted(g)) throw InputError("m_profile requires a shifted graph");
  std::vector<int> inc(static_cast<std::size_t>(g.n() - 1), 0);
  for (const Edge& e : g.edges()) ++inc[e.u - 1];
  return MProfile::from_increments(g.n(), inc);
}

Graph graph_from_profile(const MProfile& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= p.n() - 1; ++i) {
    for (int j = i + 1; j <= i + p.increment(i); ++j) pairs.emplace_back(i, j);
  }
  return Graph(p.n(), pairs);
}

std::uint64_t betti_hochster(const Graph& g, int i) {
  const int n = g.n();
  if (i < 0 || i > n - 2) throw InputError("betti_hochster requires 0 <= i <= n-2");
  if (n > 14) throw GuardExceeded("betti_hochster enumerates subsets; n must be <= 14");
  const auto rows = adjacency_masks(g);
  const int size = i + 2;
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (__builtin_popcountll(w) != size) continue;
    std::vector<std::uint64_t> induced(rows);
    for (auto& r : induced) r &= w;
    total += static_cast<std::uint64_t>(component_count(induced, w) - 1);
  }
  return total;
}

std::vector<Vertex> star_vertices(const Graph& g) {
  std::vector<int> deg(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) deg[v] = g.degree(v);
  std::vector<Vertex> stars;
  for (Vertex v = 1; v <= g.n(); ++v) {
    bool star = true;
    for (Vertex u = 1; u <= g.n() && star; ++u) {
      if (u != v && deg[u] > 0 && !g.has_edge(u, v)) star = false;
    }
    if (star) stars.push_back(v);
  }
  return stars;
}

Graph apply_permutation(const Graph& g, std::span<const Vertex> sigma) {
  if (static_cast<int>(sigma.size()) != g.n()) {
    throw InputError("permutation length must equal n");
  }
  std::vector<bool> hit(g.n() + 1, false);
  for (Vertex image : sigma) {
    if (image < 1 || image > g.n() || hit[image]) {
      throw InputError("permutation is not a bijection of [n]");
    }
    hit[image] = true;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(sigma[e.u - 1], sigma[e.v - 1]);
  return Graph(g.n(), pairs);
}

}  // namespace shiftlab
