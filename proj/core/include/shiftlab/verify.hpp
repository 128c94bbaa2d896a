#pragma once

#include <string>
#include <vector>

#include "shiftlab/algebraic.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

/// One property checked across a corpus.
struct VerifyRow {
  std::string check;
  std::string description;
  int applicable = 0;
  int violations = 0;
  /// Corpus index of the first violating graph, -1 if none.
  int first_violation = -1;
  /// Message of the first exception raised while checking, if any.
  std::string error;

  bool passed() const { return violations == 0 && error.empty(); }
};

/// Runs the full property suite (shift invariants, profile round trips,
/// chordal coincidence and algorithm agreement, Betti identities, edge and
/// disjoint shift preservation, connectivity transfer, bipartite bounds,
/// padding invariance) over the corpus. Rows come out in a fixed order, so the
/// report depends only on the corpus and cfg.
std::vector<VerifyRow> verify_corpus(const std::vector<Graph>& corpus, const GenericConfig& cfg);

}  // namespace shiftlab
