#include "shiftlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "shiftlab/combinatorial.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/oracles.hpp"

namespace shiftlab {

namespace {

constexpr int kEnumerateLimit = 9;
constexpr int kBettiLimit = 12;
constexpr int kConnectivityLimit = 12;

// Lazily computed shifts of one corpus graph.
class Subject {
 public:
  Subject(const Graph& g, const GenericConfig& cfg) : g_(g), cfg_(cfg) {}

  const Graph& graph() const { return g_; }
  const GenericConfig& cfg() const { return cfg_; }

  const Graph& exterior() {
    if (!exterior_) exterior_ = exterior_shift(g_, cfg_);
    return *exterior_;
  }
  const Graph& symmetric() {
    if (!symmetric_) symmetric_ = symmetric_shift(g_, cfg_);
    return *symmetric_;
  }
  bool chordal() {
    if (!chordal_) chordal_ = is_chordal(g_);
    return *chordal_;
  }

 private:
  const Graph& g_;
  const GenericConfig& cfg_;
  std::optional<Graph> exterior_;
  std::optional<Graph> symmetric_;
  std::optional<bool> chordal_;
};

struct Check {
  const char* name;
  const char* description;
  std::function<bool(Subject&)> applies;
  std::function<bool(Subject&)> holds;
};

bool always(Subject&) { return true; }

bool same_clique_counts(const Graph& a, const Graph& b) {
  for (int k = 1; k <= a.n(); ++k) {
    if (t_count(a, k) != t_count(b, k)) return false;
  }
  return true;
}

bool same_connectivity(const Graph& a, const Graph& b) {
  for (int k = 1; k < a.n(); ++k) {
    if (is_k_connected(a, k) != is_k_connected(b, k)) return false;
  }
  return true;
}

bool shift_algebra_holds(const Graph& g) {
  bool all_fixed = true;
  for (Vertex i = 1; i <= g.n(); ++i) {
    for (Vertex j = i + 1; j <= g.n(); ++j) {
      const Graph once = shift_ij(g, {i, j});
      if (once.edge_count() != g.edge_count()) return false;
      if (!(shift_ij(once, {i, j}) == once)) return false;
      if (!(shift_ij_closed_form(g, {i, j}) == once)) return false;
      all_fixed = all_fixed && once == g;
    }
  }
  return all_fixed == is_shifted(g);
}

bool shift_class_preserves(const Graph& g, ShiftClass wanted, bool check_connectivity) {
  for (Vertex i = 1; i <= g.n(); ++i) {
    for (Vertex j = i + 1; j <= g.n(); ++j) {
      if (classify_shift(g, {i, j}) != wanted) continue;
      const Graph h = shift_ij(g, {i, j});
      if (!is_chordal(h) || !same_clique_counts(g, h)) return false;
      if (check_connectivity) {
        for (int k = 1; k < g.n(); ++k) {
          if (is_k_connected(g, k) && !is_k_connected(h, k)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  checks.push_back({"shift-ij-algebra",
                    "Shift_ij keeps |E|, is idempotent, matches its closed form; fixed by all "
                    "Shift_ij iff shifted",
                    always, [](Subject& s) { return shift_algebra_holds(s.graph()); }});
  checks.push_back({"algebraic-shifts-shifted",
                    "exterior and symmetric shifts are shifted and keep |E|", always,
                    [](Subject& s) {
                      const auto m = s.graph().edge_count();
                      return is_shifted(s.exterior()) && is_shifted(s.symmetric()) &&
                             s.exterior().edge_count() == m && s.symmetric().edge_count() == m;
                    }});
  checks.push_back({"profile-roundtrip", "graph_from_profile inverts m_profile on both shifts",
                    always, [](Subject& s) {
                      return graph_from_profile(m_profile(s.exterior())) == s.exterior() &&
                             graph_from_profile(m_profile(s.symmetric())) == s.symmetric();
                    }});
  checks.push_back({"symmetric-padding-invariance",
                    "symmetric shift unchanged by 3 extra isolated vertices", always,
                    [](Subject& s) {
                      GenericConfig padded = s.cfg();
                      padded.pad += 3;
                      return symmetric_shift(s.graph(), padded) == s.symmetric();
                    }});
  checks.push_back({"exterior-padding-invariance",
                    "exterior shift unchanged by 3 extra isolated vertices", always,
                    [](Subject& s) {
                      const Graph wide = exterior_shift(with_isolated_vertices(s.graph(), 3), s.cfg());
                      return wide == with_isolated_vertices(s.exterior(), 3);
                    }});
  checks.push_back({"betti-formula",
                    "closed Betti formula equals the component-count oracle on the exterior shift",
                    [](Subject& s) { return s.graph().n() <= kBettiLimit; },
                    [](Subject& s) {
                      const Graph& e = s.exterior();
                      for (int i = 0; i <= e.n() - 2; ++i) {
                        if (betti_shifted_formula(e, i) != betti_hochster(e, i)) return false;
                      }
                      return true;
                    }});
  checks.push_back({"chordal-coincidence",
                    "chordal: exterior = symmetric = star-peeling algorithm",
                    [](Subject& s) { return s.chordal(); },
                    [](Subject& s) {
                      const Graph algo = chordal_shift_algorithm(s.graph()).result;
                      return s.exterior() == s.symmetric() && s.exterior() == algo;
                    }});
  checks.push_back({"chordal-algorithm-reachable",
                    "chordal: algorithm output is among the enumerated combinatorial shifts",
                    [](Subject& s) { return s.chordal() && s.graph().n() <= kEnumerateLimit; },
                    [](Subject& s) {
                      const Graph algo = chordal_shift_algorithm(s.graph()).result;
                      const auto all = enumerate_combinatorial_shifted_graphs(s.graph());
                      return std::find(all.begin(), all.end(), algo) != all.end();
                    }});
  checks.push_back({"chordal-betti-invariance",
                    "chordal: linear-strand Betti numbers agree with those of the exterior shift",
                    [](Subject& s) { return s.chordal() && s.graph().n() <= kBettiLimit; },
                    [](Subject& s) {
                      for (int i = 0; i <= s.graph().n() - 2; ++i) {
                        if (betti_hochster(s.graph(), i) != betti_hochster(s.exterior(), i)) {
                          return false;
                        }
                      }
                      return true;
                    }});
  checks.push_back({"chordal-clique-counts",
                    "chordal: clique counts agree with those of the exterior shift",
                    [](Subject& s) { return s.chordal(); },
                    [](Subject& s) { return same_clique_counts(s.graph(), s.exterior()); }});
  checks.push_back({"edge-shift-preservation",
                    "chordal: edge shifts keep chordality, clique counts, k-connectivity",
                    [](Subject& s) { return s.chordal() && s.graph().n() <= kConnectivityLimit; },
                    [](Subject& s) {
                      return shift_class_preserves(s.graph(), ShiftClass::edge, true);
                    }});
  checks.push_back({"disjoint-shift-preservation",
                    "chordal: disjoint shifts keep chordality and clique counts",
                    [](Subject& s) { return s.chordal(); },
                    [](Subject& s) {
                      return shift_class_preserves(s.graph(), ShiftClass::disjoint, false);
                    }});
  checks.push_back({"chordal-connectivity",
                    "chordal: k-connected iff the exterior shift is k-connected",
                    [](Subject& s) { return s.chordal() && s.graph().n() <= kConnectivityLimit; },
                    [](Subject& s) { return same_connectivity(s.graph(), s.exterior()); }});
  checks.push_back({"connected-full-star",
                    "connected: some combinatorial shift has vertex 1 adjacent to all others",
                    [](Subject& s) {
                      return s.graph().n() <= kEnumerateLimit && is_connected(s.graph());
                    },
                    [](Subject& s) {
                      const auto all = enumerate_combinatorial_shifted_graphs(s.graph());
                      return std::any_of(all.begin(), all.end(), [&](const Graph& d) {
                        return m_profile(d).at_most(1) == s.graph().n() - 1;
                      });
                    }});
  checks.push_back({"bipartite-sandwich",
                    "bipartite: symmetric profile lies between the exterior-derived bounds",
                    [](Subject& s) { return is_bipartite(s.graph()) && s.graph().n() >= 2; },
                    [](Subject& s) {
                      return bipartite_sandwich_check(m_profile(s.exterior()),
                                                      m_profile(s.symmetric()), s.graph().n());
                    }});
  checks.push_back({"bipartite-separation",
                    "bipartite: edge {h(n), h(n)+1} in the exterior shift forces the shifts apart",
                    [](Subject& s) { return is_bipartite(s.graph()); },
                    [](Subject& s) {
                      return !coro_predicate(s.exterior()) || !(s.exterior() == s.symmetric());
                    }});
  return checks;
}

}  // namespace

std::vector<VerifyRow> verify_corpus(const std::vector<Graph>& corpus, const GenericConfig& cfg) {
  const auto checks = build_checks();
  std::vector<VerifyRow> rows;
  rows.reserve(checks.size());
  for (const Check& c : checks) rows.push_back(VerifyRow{c.name, c.description, 0, 0, -1, {}});
  for (std::size_t index = 0; index < corpus.size(); ++index) {
    Subject subject(corpus[index], cfg);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      VerifyRow& row = rows[c];
      try {
        if (!checks[c].applies(subject)) continue;
        ++row.applicable;
        if (!checks[c].holds(subject)) {
          ++row.violations;
          if (row.first_violation < 0) row.first_violation = static_cast<int>(index);
        }
      } catch (const Error& err) {
        ++row.violations;
        if (row.first_violation < 0) row.first_violation = static_cast<int>(index);
        if (row.error.empty()) row.error = err.what();
      }
    }
  }
  return rows;
}

}  // namespace shiftlab
