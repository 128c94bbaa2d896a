#include "shiftlab/compare.hpp"

#include <algorithm>

#include "shiftlab/combinatorial.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/io.hpp"

namespace shiftlab {

ShiftMethod parse_shift_method(const std::string& name) {
  if (name == "exterior") return ShiftMethod::exterior;
  if (name == "symmetric") return ShiftMethod::symmetric;
  if (name == "combinatorial") return ShiftMethod::combinatorial;
  if (name == "chordal-algo") return ShiftMethod::chordal_algo;
  throw InputError("unknown method '" + name +
                   "' (exterior|symmetric|combinatorial|chordal-algo)");
}

const char* to_string(ShiftMethod m) {
  switch (m) {
    case ShiftMethod::exterior:
      return "exterior";
    case ShiftMethod::symmetric:
      return "symmetric";
    case ShiftMethod::combinatorial:
      return "combinatorial";
    case ShiftMethod::chordal_algo:
      return "chordal-algo";
  }
  return "exterior";
}

Graph shift_by(const Graph& g, ShiftMethod method, const GenericConfig& cfg) {
  switch (method) {
    case ShiftMethod::exterior:
      return exterior_shift(g, cfg);
    case ShiftMethod::symmetric:
      return symmetric_shift(g, cfg);
    case ShiftMethod::combinatorial:
      return canonical_combinatorial_shift(g).result;
    case ShiftMethod::chordal_algo:
      return chordal_shift_algorithm(g).result;
  }
  return g;
}

bool CompareReport::all_equal() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const PairVerdict& v) { return v.equal; });
}

CompareReport run_compare(const Graph& g, const std::vector<ShiftMethod>& methods,
                          const GenericConfig& cfg) {
  CompareReport report{g, {}, {}};
  for (ShiftMethod m : methods) {
    const bool seen = std::any_of(report.results.begin(), report.results.end(),
                                  [m](const MethodResult& r) { return r.method == m; });
    if (seen) continue;
    Graph shifted = shift_by(g, m, cfg);
    MProfile profile = m_profile(shifted);
    report.results.push_back(MethodResult{m, std::move(shifted), std::move(profile)});
  }
  for (std::size_t a = 0; a < report.results.size(); ++a) {
    for (std::size_t b = a + 1; b < report.results.size(); ++b) {
      report.verdicts.push_back(PairVerdict{report.results[a].method, report.results[b].method,
                                            report.results[a].shifted == report.results[b].shifted});
    }
  }
  return report;
}

nlohmann::json to_json(const CompareReport& report) {
  nlohmann::json results = nlohmann::json::object();
  for (const MethodResult& r : report.results) {
    results[to_string(r.method)] = {{"edges", to_json(r.shifted)["edges"]},
                                    {"profile", to_json(r.profile)}};
  }
  nlohmann::json verdicts = nlohmann::json::object();
  for (const PairVerdict& v : report.verdicts) {
    verdicts[std::string(to_string(v.first)) + "=" + to_string(v.second)] = v.equal;
  }
  verdicts["all_equal"] = report.all_equal();
  return {{"graph", to_json(report.graph)}, {"results", results}, {"verdicts", verdicts}};
}

}  // namespace shiftlab
