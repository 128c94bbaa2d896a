#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shiftlab/graph.hpp"

namespace shiftlab {

/// The pair (i, j), i < j, of a compression Shift_ij.
struct ShiftStep {
  Vertex i = 0;
  Vertex j = 0;

  friend bool operator==(const ShiftStep&, const ShiftStep&) = default;
};

/// A star-vertex removal recorded by the chordal algorithm: `vertex` was a
/// star vertex of degree `degree`, peeled after `after_step` shift steps.
struct Peel {
  Vertex vertex = 0;
  int degree = 0;
  std::size_t after_step = 0;

  friend bool operator==(const Peel&, const Peel&) = default;
};

/// A shift sequence and the graph it produces from its source.
struct ShiftTrace {
  std::vector<ShiftStep> steps;
  Graph result = Graph::edgeless(1);
  /// Only populated by chordal_shift_algorithm.
  std::vector<Peel> peels;
};

enum class ShiftClass { edge, disjoint, other };

/// Shift_ij by the compression rule: every edge S containing j but not i is
/// replaced by (S \ {j}) u {i} unless that edge is already present.
/// Throws InputError unless 1 <= i < j <= n.
Graph shift_ij(const Graph& g, ShiftStep s);

/// Shift_ij assembled from its neighbourhood description: edges avoiding both
/// i and j (and {i, j} itself) are kept, i becomes adjacent to N(i) u N(j), and
/// j keeps only N(i) n N(j). Must agree with shift_ij.
Graph shift_ij_closed_form(const Graph& g, ShiftStep s);

/// Left-to-right composition. Throws InputError on an invalid step.
ShiftTrace apply_shift_sequence(const Graph& g, std::span<const ShiftStep> steps);

/// Sweeps all (i, j) in lexicographic order, repeatedly, until a full sweep
/// changes nothing. Only effective steps are recorded.
ShiftTrace canonical_combinatorial_shift(const Graph& g);

/// All shifted graphs reachable from g by sequences of Shift_ij, in sorted
/// order. Requires n <= 9; throws GuardExceeded past 2^22 visited states.
std::vector<Graph> enumerate_combinatorial_shifted_graphs(const Graph& g);

/// Exactly one combinatorial shifted graph exists (decided by enumeration).
bool delta_c_is_unique(const Graph& g);

/// edge if {i, j} is an edge, disjoint if i and j lie in different components,
/// other otherwise.
ShiftClass classify_shift(const Graph& g, ShiftStep s);

/// The star-peeling algorithm for chordal graphs. Throws InputError on a
/// non-chordal input.
///
/// Each round takes u = min of the remaining vertices. (I) While u is isolated
/// or more than one non-trivial component remains, apply the disjoint shift
/// Shift_uj with j the smallest non-isolated vertex outside u's component.
/// (II) While u is not a star vertex, apply the edge shifts Shift_uv for the
/// current neighbours v of u in increasing order. (III) Record the edges
/// {u, u+1}, ..., {u, u+deg(u)}, then delete u. Stops when no edges remain.
///
/// `result` is the accumulated edge set. `steps` holds the shifts of (I) and
/// (II) followed by a lexicographic completion sweep; replaying `steps` on the
/// input reproduces `result`, which certifies it as a combinatorial shifted
/// graph (verified internally). `peels` records every (III).
ShiftTrace chordal_shift_algorithm(const Graph& g);

const char* to_string(ShiftClass c);

}  // namespace shiftlab
