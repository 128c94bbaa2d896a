#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shiftlab/algebraic.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

enum class ShiftMethod { exterior, symmetric, combinatorial, chordal_algo };

/// Accepts "exterior", "symmetric", "combinatorial", "chordal-algo".
ShiftMethod parse_shift_method(const std::string& name);
const char* to_string(ShiftMethod m);

/// Any shifting method applied to g. combinatorial is the canonical
/// lexicographic sweep; chordal_algo requires a chordal input.
Graph shift_by(const Graph& g, ShiftMethod method, const GenericConfig& cfg);

struct MethodResult {
  ShiftMethod method;
  Graph shifted;
  MProfile profile;
};

struct PairVerdict {
  ShiftMethod first;
  ShiftMethod second;
  bool equal = false;
};

struct CompareReport {
  Graph graph;
  std::vector<MethodResult> results;
  std::vector<PairVerdict> verdicts;

  bool all_equal() const;
};

/// Runs each method once (duplicates ignored, order preserved) and compares
/// every pair. chordal_algo on a non-chordal input throws InputError.
CompareReport run_compare(const Graph& g, const std::vector<ShiftMethod>& methods,
                          const GenericConfig& cfg);

/// {"graph": ..., "results": {method: {"edges": ..., "profile": ...}},
///  "verdicts": {"a=b": bool, ..., "all_equal": bool}}
nlohmann::json to_json(const CompareReport& report);

}  // namespace shiftlab
