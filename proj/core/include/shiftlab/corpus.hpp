#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/graph.hpp"

namespace shiftlab {

enum class CorpusModel { gnp, chordal, bipartite, kab };

/// Random graph corpus description.
///
///   gnp        each pair independently with probability p
///   chordal    vertices placed one at a time; each new vertex picks a random
///              earlier vertex w and joins a random subset (probability p per
///              member) of the clique w joined plus w itself. The new vertex
///              is simplicial when placed, so every output is chordal. Labels
///              are then randomly permuted.
///   bipartite  random 2-colouring of [n], cross pairs with probability p
///   kab        the single graph K_{a,b}; count is ignored
struct CorpusSpec {
  CorpusModel model = CorpusModel::gnp;
  int n = 6;
  int a = 3;
  int b = 3;
  double p = 0.5;
  int count = 1;
  std::uint64_t seed = 1;

  /// Throws InputError on p outside [0, 1], count < 1, n < 1, a or b < 1.
  void validate() const;
};

CorpusModel parse_corpus_model(const std::string& name);
const char* to_string(CorpusModel m);

/// Deterministic given the spec.
std::vector<Graph> gen_corpus(const CorpusSpec& spec);

}  // namespace shiftlab
