#include "shiftlab/combinatorial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void require_step(const Graph& g, ShiftStep s) {
  if (!(1 <= s.i && s.i < s.j && s.j <= g.n())) {
    throw InputError("invalid shift step (" + std::to_string(s.i) + "," + std::to_string(s.j) +
                     "): need 1 <= i < j <= " + std::to_string(g.n()));
  }
}

constexpr int kEnumerateMaxN = 9;
constexpr std::size_t kEnumerateMaxStates = std::size_t{1} << 22;

// Edge-set bitmask over the C(n,2) <= 36 vertex pairs of a small graph.
class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n) {
    int next = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        index_[a][b] = index_[b][a] = next;
        pairs_[next++] = {a, b};
      }
    count_ = next;
  }

  int n() const { return n_; }
  std::uint64_t bit(int a, int b) const { return std::uint64_t{1} << index_[a][b]; }

  std::uint64_t encode(const Graph& g) const {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) mask |= bit(e.u - 1, e.v - 1);
    return mask;
  }

  Graph decode(std::uint64_t mask) const {
    std::vector<Edge> edges;
    for (int p = 0; p < count_; ++p) {
      if (mask >> p & 1U) edges.push_back(Edge{pairs_[p][0] + 1, pairs_[p][1] + 1});
    }
    return Graph(n_, edges);
  }

  // Shift_ij on the mask; i < j are 0-based.
  std::uint64_t shift(std::uint64_t mask, int i, int j) const {
    std::uint64_t out = mask;
    for (int t = 0; t < n_; ++t) {
      if (t == i || t == j) continue;
      const std::uint64_t jt = bit(j, t);
      const std::uint64_t it = bit(i, t);
      if ((mask & jt) != 0 && (mask & it) == 0) out = (out & ~jt) | it;
    }
    return out;
  }

 private:
  int n_;
  int count_ = 0;
  std::array<std::array<int, kEnumerateMaxN>, kEnumerateMaxN> index_{};
  std::array<std::array<int, 2>, kEnumerateMaxN*(kEnumerateMaxN - 1) / 2> pairs_{};
};

Graph remove_edges_at(const Graph& g, Vertex u) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.u != u && e.v != u) kept.push_back(e);
  }
  return Graph(g.n(), kept);
}

bool is_star_vertex(const Graph& g, Vertex u) {
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (v != u && !g.has_edge(u, v) && g.degree(v) > 0) return false;
  }
  return true;
}

// Smallest non-isolated vertex outside u's component, or 0 when the only
// non-trivial component already contains u.
Vertex disjoint_partner(const Graph& h, Vertex u) {
  for (const auto& part : connected_components(h)) {
    if (part.size() < 2) continue;
    if (std::binary_search(part.begin(), part.end(), u)) continue;
    return part.front();
  }
  return 0;
}

}  // namespace

Graph shift_ij(const Graph& g, ShiftStep s) {
  require_step(g, s);
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const bool has_j = e.u == s.j || e.v == s.j;
    const bool has_i = e.u == s.i || e.v == s.i;
    if (has_j && !has_i) {
      const Vertex other = e.u == s.j ? e.v : e.u;
      if (!g.has_edge(s.i, other)) {
        out.push_back(Edge{std::min(s.i, other), std::max(s.i, other)});
        continue;
      }
    }
    out.push_back(e);
  }
  return Graph(g.n(), out);
}

Graph shift_ij_closed_form(const Graph& g, ShiftStep s) {
  require_step(g, s);
  const Vertex p = s.i;
  const Vertex q = s.j;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const bool pq = e.u == p && e.v == q;
    const bool avoids = e.u != p && e.u != q && e.v != p && e.v != q;
    if (pq || avoids) out.push_back(e);
  }
  for (Vertex t = 1; t <= g.n(); ++t) {
    if (t == p || t == q) continue;
    if (g.has_edge(p, t) || g.has_edge(q, t)) out.push_back(Edge{std::min(p, t), std::max(p, t)});
    if (g.has_edge(p, t) && g.has_edge(q, t)) out.push_back(Edge{std::min(q, t), std::max(q, t)});
  }
  return Graph(g.n(), out);
}

ShiftTrace apply_shift_sequence(const Graph& g, std::span<const ShiftStep> steps) {
  ShiftTrace trace{{}, g, {}};
  for (const ShiftStep& s : steps) {
    trace.result = shift_ij(trace.result, s);
    trace.steps.push_back(s);
  }
  return trace;
}

ShiftTrace canonical_combinatorial_shift(const Graph& g) {
  ShiftTrace trace{{}, g, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex i = 1; i <= g.n(); ++i) {
      for (Vertex j = i + 1; j <= g.n(); ++j) {
        Graph next = shift_ij(trace.result, {i, j});
        if (next == trace.result) continue;
        trace.result = std::move(next);
        trace.steps.push_back({i, j});
        changed = true;
      }
    }
  }
  return trace;
}

std::vector<Graph> enumerate_combinatorial_shifted_graphs(const Graph& g) {
  if (g.n() > kEnumerateMaxN) {
    throw GuardExceeded("enumeration supports n <= " + std::to_string(kEnumerateMaxN) +
                        ", got n = " + std::to_string(g.n()));
  }
  const PairIndex index(g.n());
  const std::uint64_t start = index.encode(g);
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> frontier{start};
  std::vector<std::uint64_t> fixpoints;
  while (!frontier.empty()) {
    const std::uint64_t state = frontier.front();
    frontier.pop_front();
    bool fixed = true;
    for (int i = 0; i < g.n(); ++i) {
      for (int j = i + 1; j < g.n(); ++j) {
        const std::uint64_t next = index.shift(state, i, j);
        if (next == state) continue;
        fixed = false;
        if (seen.insert(next).second) {
          if (seen.size() > kEnumerateMaxStates) {
            throw GuardExceeded("enumeration exceeded 2^22 states");
          }
          frontier.push_back(next);
        }
      }
    }
    if (fixed) fixpoints.push_back(state);
  }
  std::vector<Graph> out;
  out.reserve(fixpoints.size());
  for (std::uint64_t mask : fixpoints) out.push_back(index.decode(mask));
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
  return out;
}

bool delta_c_is_unique(const Graph& g) {
  return enumerate_combinatorial_shifted_graphs(g).size() == 1;
}

ShiftClass classify_shift(const Graph& g, ShiftStep s) {
  require_step(g, s);
  if (g.has_edge(s.i, s.j)) return ShiftClass::edge;
  if (!same_component(g, s.i, s.j)) return ShiftClass::disjoint;
  return ShiftClass::other;
}

ShiftTrace chordal_shift_algorithm(const Graph& g) {
  if (!is_chordal(g)) throw InputError("chordal_shift_algorithm requires a chordal graph");
  ShiftTrace trace{{}, Graph::edgeless(g.n()), {}};
  std::vector<Edge> accumulated;
  Graph h = g;
  for (Vertex u = 1; h.edge_count() > 0; ++u) {
    // (I) merge the non-trivial components into u's. An isolated u has no
    // component of its own, so it is first moved onto one.
    while (true) {
      const Vertex j = disjoint_partner(h, u);
      if (j == 0) break;
      h = shift_ij(h, {u, j});
      trace.steps.push_back({u, j});
    }
    // (II) edge shifts until u is adjacent to every non-isolated vertex.
    while (!is_star_vertex(h, u)) {
      for (Vertex v : h.neighbors(u)) {
        Graph next = shift_ij(h, {u, v});
        if (next == h) continue;
        h = std::move(next);
        trace.steps.push_back({u, v});
        if (is_star_vertex(h, u)) break;
      }
    }
    // (III) peel the star vertex.
    const int degree = h.degree(u);
    for (int t = 1; t <= degree; ++t) accumulated.push_back(Edge{u, u + t});
    trace.peels.push_back(Peel{u, degree, trace.steps.size()});
    h = remove_edges_at(h, u);
  }
  trace.result = Graph(g.n(), accumulated);

  // Replaying the algorithm's shifts on the whole graph leaves the peeled
  // vertices' edges possibly pointing at high-numbered vertices; a final
  // lexicographic sweep pulls them down. The outcome must be the peeled graph.
  Graph replay = apply_shift_sequence(g, trace.steps).result;
  ShiftTrace completion = canonical_combinatorial_shift(replay);
  trace.steps.insert(trace.steps.end(), completion.steps.begin(), completion.steps.end());
  if (!(completion.result == trace.result)) {
    throw std::logic_error("chordal_shift_algorithm: replayed shift sequence disagrees with the "
                           "peeled result");
  }
  return trace;
}

const char* to_string(ShiftClass c) {
  switch (c) {
    case ShiftClass::edge:
      return "edge";
    case ShiftClass::disjoint:
      return "disjoint";
    case ShiftClass::other:
      return "other";
  }
  return "other";
}

}  // namespace shiftlab
