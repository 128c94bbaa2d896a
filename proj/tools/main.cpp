// shiftlab command-line front end.
//
// Exit codes: 0 success, 1 a checked property or comparison failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shiftlab/algebraic.hpp"
#include "shiftlab/combinatorial.hpp"
#include "shiftlab/compare.hpp"
#include "shiftlab/corpus.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/oracles.hpp"
#include "shiftlab/verify.hpp"

namespace {

using namespace shiftlab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

enum class Format { human, json, dot };

struct Options {
  std::string format = "human";
  std::optional<std::uint64_t> seed;
  std::int64_t bound = GenericConfig{}.bound;
  int repeats = GenericConfig{}.repeats;
  int pad = 0;
  bool pad_check = false;
};

Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  throw InputError("unknown format '" + s + "' (human|json|dot)");
}

std::uint64_t parse_seed(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used, 0);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("invalid ") + what + " '" + text + "'");
}

// Option callbacks run inside CLI11's parser, so report as its own error type.
std::uint64_t seed_option(const std::string& text) {
  try {
    return parse_seed(text, "--seed");
  } catch (const InputError& e) {
    throw CLI::ValidationError("--seed", e.what());
  }
}

// --seed wins over SHIFTLAB_SEED, which wins over the built-in default.
std::uint64_t resolve_seed(const Options& o, std::uint64_t fallback) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("SHIFTLAB_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "SHIFTLAB_SEED");
  }
  return fallback;
}

GenericConfig make_config(const Options& o) {
  GenericConfig cfg;
  cfg.seed = resolve_seed(o, cfg.seed);
  cfg.bound = o.bound;
  cfg.repeats = o.repeats;
  cfg.pad = o.pad;
  cfg.pad_check = o.pad_check;
  cfg.validate();
  return cfg;
}

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  return parse_graph_file(path);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "human | json | dot")->capture_default_str();
}

void add_generic(CLI::App* cmd, Options& o) {
  cmd->add_option_function<std::string>(
      "--seed", [&o](const std::string& s) { o.seed = seed_option(s); },
      "64-bit seed (overrides SHIFTLAB_SEED)");
  cmd->add_option("--bound", o.bound, "entries drawn from [-bound, bound] \\ {0}")
      ->capture_default_str();
  cmd->add_option("--repeats", o.repeats, "samples per rank profile")->capture_default_str();
  cmd->add_option("--pad", o.pad, "isolated vertices added for the symmetric shift")
      ->capture_default_str();
  cmd->add_flag("--pad-check", o.pad_check, "recompute the symmetric shift at pad + 3");
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

void no_dot(Format f, const char* command) {
  if (f == Format::dot) throw InputError(std::string(command) + ": --format dot is not available");
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string path;
  bool shifted = false;
  bool chordal = false;
  std::optional<int> connectivity;
};

int run_check(const CheckArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "check");
  const Graph g = read_graph(a.path);
  const bool any = a.shifted || a.chordal || a.connectivity;
  std::vector<std::pair<std::string, bool>> rows;
  if (a.shifted || !any) rows.emplace_back("shifted", is_shifted(g));
  if (a.chordal || !any) rows.emplace_back("chordal", is_chordal(g));
  if (!any) rows.emplace_back("connected", is_connected(g));
  if (a.connectivity) {
    if (*a.connectivity < 1) throw InputError("check: --connectivity must be at least 1");
    rows.emplace_back(std::to_string(*a.connectivity) + "-connected",
                      is_k_connected(g, *a.connectivity));
  }
  if (f == Format::json) {
    json j = json::object();
    for (const auto& [name, ok] : rows) j[name] = ok;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [name, ok] : rows) std::cout << std::left << std::setw(14) << name << (ok ? "yes" : "no") << '\n';
  }
  if (!any) return kOk;
  for (const auto& row : rows)
    if (!row.second) return kViolation;
  return kOk;
}

// ---- shift / profile -----------------------------------------------------

struct ShiftArgs {
  std::string path;
  std::string method = "exterior";
  bool trace = false;
};

int run_shift(const ShiftArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  const Graph g = read_graph(a.path);
  const ShiftMethod method = parse_shift_method(a.method);
  const GenericConfig cfg = make_config(o);
  std::optional<ShiftTrace> trace;
  if (method == ShiftMethod::combinatorial) trace = canonical_combinatorial_shift(g);
  if (method == ShiftMethod::chordal_algo) trace = chordal_shift_algorithm(g);
  if (a.trace && !trace) throw InputError("shift: --trace needs a combinatorial method");
  const Graph shifted = trace ? trace->result : shift_by(g, method, cfg);

  if (f == Format::dot) {
    std::cout << to_dot(shifted);
  } else if (f == Format::json) {
    std::cout << (a.trace ? to_json(*trace) : to_json(shifted)).dump() << '\n';
  } else {
    std::cout << "method   " << to_string(method) << '\n';
    std::cout << "n        " << shifted.n() << '\n';
    std::cout << "edges    " << edge_list_string(shifted) << '\n';
    std::cout << "profile  " << join_ints(m_profile(shifted).cumulative()) << '\n';
    if (a.trace) {
      std::cout << "steps   ";
      for (const ShiftStep& s : trace->steps) std::cout << " (" << s.i << "," << s.j << ")";
      std::cout << '\n';
      for (const Peel& p : trace->peels) {
        std::cout << "peel     vertex " << p.vertex << " degree " << p.degree << " after step "
                  << p.after_step << '\n';
      }
    }
  }
  return kOk;
}

int run_profile(const ShiftArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "profile");
  const Graph g = read_graph(a.path);
  const MProfile p = m_profile(shift_by(g, parse_shift_method(a.method), make_config(o)));
  if (f == Format::json) {
    std::cout << to_json(p).dump() << '\n';
  } else {
    std::cout << "k      ";
    for (int k = 1; k < p.n(); ++k) std::cout << std::setw(5) << k;
    std::cout << "\nm_k    ";
    for (int k = 1; k < p.n(); ++k) std::cout << std::setw(5) << p.increment(k);
    std::cout << "\nm_<=k  ";
    for (int k = 1; k < p.n(); ++k) std::cout << std::setw(5) << p.at_most(k);
    std::cout << '\n';
  }
  return kOk;
}

// ---- compare -------------------------------------------------------------

struct CompareArgs {
  std::string path;
  std::vector<std::string> methods{"exterior", "symmetric"};
  bool expect_equal = false;
};

int run_compare_cmd(const CompareArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "compare");
  const Graph g = read_graph(a.path);
  std::vector<ShiftMethod> methods;
  for (const auto& m : a.methods) methods.push_back(parse_shift_method(m));
  const CompareReport report = run_compare(g, methods, make_config(o));
  if (f == Format::json) {
    std::cout << to_json(report).dump() << '\n';
  } else {
    for (const MethodResult& r : report.results) {
      std::cout << std::left << std::setw(14) << to_string(r.method) << edge_list_string(r.shifted)
                << '\n';
      std::cout << std::setw(14) << "" << "profile " << join_ints(r.profile.cumulative()) << '\n';
    }
    for (const PairVerdict& v : report.verdicts) {
      std::cout << to_string(v.first) << " vs " << to_string(v.second) << ": "
                << (v.equal ? "EQUAL" : "DIFFER") << '\n';
    }
  }
  return a.expect_equal && !report.all_equal() ? kViolation : kOk;
}

// ---- oracle kab ----------------------------------------------------------

struct KabArgs {
  int a = 0;
  int b = 0;
  std::string method = "exterior";
  bool check = false;
};

int run_kab(const KabArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "oracle kab");
  if (a.a < a.b) throw InputError("oracle kab: requires a >= b");
  const ShiftMethod method = parse_shift_method(a.method);
  if (method != ShiftMethod::exterior && method != ShiftMethod::symmetric) {
    throw InputError("oracle kab: --method must be exterior or symmetric");
  }
  const MProfile closed = method == ShiftMethod::exterior ? kab_exterior_profile(a.a, a.b)
                                                          : kab_symmetric_profile(a.a, a.b);
  std::optional<MProfile> computed;
  if (a.check) computed = m_profile(shift_by(complete_bipartite(a.a, a.b), method, make_config(o)));
  const bool match = !computed || *computed == closed;
  if (f == Format::json) {
    json j = {{"closed_form", to_json(closed)}};
    if (computed) {
      j["computed"] = to_json(*computed);
      j["match"] = match;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "closed form  " << join_ints(closed.cumulative()) << '\n';
    if (computed) {
      std::cout << "computed     " << join_ints(computed->cumulative()) << '\n';
      std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
    }
  }
  return match ? kOk : kViolation;
}

// ---- betti ---------------------------------------------------------------

struct BettiArgs {
  std::string path;
  std::optional<int> max_i;
  std::string oracle = "hochster";
};

int run_betti(const BettiArgs& a, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "betti");
  const Graph g = read_graph(a.path);
  if (a.oracle != "hochster" && a.oracle != "formula") {
    throw InputError("betti: --oracle must be hochster or formula");
  }
  const int top = a.max_i ? std::min(*a.max_i, g.n() - 2) : g.n() - 2;
  std::vector<std::uint64_t> values;
  for (int i = 0; i <= top; ++i) {
    values.push_back(a.oracle == "formula" ? betti_shifted_formula(g, i) : betti_hochster(g, i));
  }
  if (f == Format::json) {
    std::cout << json(values).dump() << '\n';
  } else {
    std::cout << "i   beta_{i,i+2}\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << std::left << std::setw(4) << i << values[i] << '\n';
    }
  }
  return kOk;
}

// ---- gen / verify --------------------------------------------------------

struct CorpusArgs {
  std::string model = "gnp";
  CorpusSpec spec;
};

void add_corpus(CLI::App* cmd, CorpusArgs& c) {
  cmd->add_option("--model", c.model, "gnp | chordal | bipartite | kab")->capture_default_str();
  cmd->add_option("--n", c.spec.n, "vertex count")->capture_default_str();
  cmd->add_option("--a", c.spec.a, "K_{a,b} part size")->capture_default_str();
  cmd->add_option("--b", c.spec.b, "K_{a,b} part size")->capture_default_str();
  cmd->add_option("--p", c.spec.p, "edge probability")->capture_default_str();
  cmd->add_option("--count", c.spec.count, "number of graphs")->capture_default_str();
}

std::vector<Graph> make_corpus(CorpusArgs c, const Options& o) {
  c.spec.model = parse_corpus_model(c.model);
  c.spec.seed = resolve_seed(o, c.spec.seed);
  return gen_corpus(c.spec);
}

int run_gen(const CorpusArgs& c, const Options& o) {
  const Format f = parse_format(o.format);
  const auto corpus = make_corpus(c, o);
  if (f == Format::json) {
    json out = json::array();
    for (const Graph& g : corpus) out.push_back(to_json(g));
    std::cout << out.dump() << '\n';
  } else if (f == Format::dot) {
    for (std::size_t i = 0; i < corpus.size(); ++i) std::cout << to_dot(corpus[i], "G" + std::to_string(i));
  } else {
    for (const Graph& g : corpus) std::cout << g.n() << "  " << edge_list_string(g) << '\n';
  }
  return kOk;
}

int run_verify(const CorpusArgs& c, const Options& o) {
  const Format f = parse_format(o.format);
  no_dot(f, "verify");
  const auto corpus = make_corpus(c, o);
  const auto rows = verify_corpus(corpus, make_config(o));
  bool ok = true;
  for (const VerifyRow& r : rows) ok = ok && r.passed();
  if (f == Format::json) {
    json out = json::array();
    for (const VerifyRow& r : rows) {
      out.push_back({{"check", r.check},
                     {"description", r.description},
                     {"applicable", r.applicable},
                     {"violations", r.violations},
                     {"first_violation", r.first_violation},
                     {"error", r.error},
                     {"passed", r.passed()}});
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << std::left << std::setw(30) << "check" << std::setw(8) << "graphs" << std::setw(8)
              << "fails" << "result\n";
    for (const VerifyRow& r : rows) {
      std::cout << std::setw(30) << r.check << std::setw(8) << r.applicable << std::setw(8)
                << r.violations << (r.passed() ? "PASS" : "FAIL");
      if (r.first_violation >= 0) std::cout << "  (first at graph " << r.first_violation << ")";
      if (!r.error.empty()) std::cout << "  " << r.error;
      std::cout << '\n';
    }
    std::cout << corpus.size() << " graphs, " << (ok ? "all checks passed" : "violations found")
              << '\n';
  }
  return ok ? kOk : kViolation;
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(const std::string& path, const Options& o) {
  const Format f = parse_format(o.format);
  const Graph g = read_graph(path);
  const auto all = enumerate_combinatorial_shifted_graphs(g);
  if (f == Format::json) {
    json out = json::array();
    for (const Graph& d : all) out.push_back(to_json(d));
    std::cout << out.dump() << '\n';
  } else if (f == Format::dot) {
    for (std::size_t i = 0; i < all.size(); ++i) std::cout << to_dot(all[i], "D" + std::to_string(i));
  } else {
    for (const Graph& d : all) {
      std::cout << edge_list_string(d) << "   profile " << join_ints(m_profile(d).cumulative())
                << '\n';
    }
    std::cout << all.size() << (all.size() == 1 ? " shifted graph (unique)\n" : " shifted graphs\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: exterior, symmetric and combinatorial shifting of graphs"};
  app.require_subcommand(1);
  Options opts;

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "test structural properties of a graph");
  check->add_option("graph", check_args.path, "graph JSON file, - for stdin")->required();
  check->add_flag("--shifted", check_args.shifted, "is the graph shifted");
  check->add_flag("--chordal", check_args.chordal, "is the graph chordal");
  check->add_option("--connectivity", check_args.connectivity, "is the graph k-connected");
  add_format(check, opts);

  ShiftArgs shift_args;
  auto* shift = app.add_subcommand("shift", "compute a shifted graph");
  shift->add_option("graph", shift_args.path, "graph JSON file, - for stdin")->required();
  shift->add_option("--method", shift_args.method,
                    "exterior | symmetric | combinatorial | chordal-algo")
      ->capture_default_str();
  shift->add_flag("--trace", shift_args.trace, "emit the shift steps (combinatorial methods)");
  add_format(shift, opts);
  add_generic(shift, opts);

  ShiftArgs profile_args;
  auto* profile = app.add_subcommand("profile", "m-profile of a shifted graph");
  profile->add_option("graph", profile_args.path, "graph JSON file, - for stdin")->required();
  profile->add_option("--method", profile_args.method,
                      "exterior | symmetric | combinatorial | chordal-algo")
      ->capture_default_str();
  add_format(profile, opts);
  add_generic(profile, opts);

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "run several shifting methods and diff them");
  compare->add_option("graph", compare_args.path, "graph JSON file, - for stdin")->required();
  compare->add_option("--methods", compare_args.methods, "methods to compare")
      ->delimiter(',')
      ->capture_default_str();
  compare->add_flag("--expect-equal", compare_args.expect_equal,
                    "exit 1 unless all methods agree");
  add_format(compare, opts);
  add_generic(compare, opts);

  KabArgs kab_args;
  auto* oracle = app.add_subcommand("oracle", "closed-form profiles");
  oracle->require_subcommand(1);
  auto* kab = oracle->add_subcommand("kab", "profiles of the shifts of K_{a,b}");
  kab->add_option("a", kab_args.a, "larger part")->required()->check(CLI::PositiveNumber);
  kab->add_option("b", kab_args.b, "smaller part")->required()->check(CLI::PositiveNumber);
  kab->add_option("--method", kab_args.method, "exterior | symmetric")->capture_default_str();
  kab->add_flag("--check", kab_args.check, "also compute the shift and compare");
  add_format(kab, opts);
  add_generic(kab, opts);

  BettiArgs betti_args;
  auto* betti = app.add_subcommand("betti", "linear-strand Betti numbers of the non-edge ideal");
  betti->add_option("graph", betti_args.path, "graph JSON file, - for stdin")->required();
  betti->add_option("--max-i", betti_args.max_i, "largest homological degree");
  betti->add_option("--oracle", betti_args.oracle, "hochster | formula (shifted graphs)")
      ->capture_default_str();
  add_format(betti, opts);

  CorpusArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random graph corpus");
  add_corpus(gen, gen_args);
  add_format(gen, opts);
  gen->add_option_function<std::string>(
      "--seed", [&opts](const std::string& s) { opts.seed = seed_option(s); },
      "64-bit corpus seed (overrides SHIFTLAB_SEED)");

  std::string enum_path;
  auto* enumerate = app.add_subcommand("enumerate", "all combinatorial shifted graphs of a graph");
  enumerate->add_option("graph", enum_path, "graph JSON file, - for stdin")->required();
  add_format(enumerate, opts);

  CorpusArgs verify_args;
  verify_args.model = "chordal";
  auto* verify = app.add_subcommand("verify", "run the property suite over a generated corpus");
  add_corpus(verify, verify_args);
  add_format(verify, opts);
  add_generic(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(check_args, opts);
    if (*shift) return run_shift(shift_args, opts);
    if (*profile) return run_profile(profile_args, opts);
    if (*compare) return run_compare_cmd(compare_args, opts);
    if (*kab) return run_kab(kab_args, opts);
    if (*betti) return run_betti(betti_args, opts);
    if (*gen) return run_gen(gen_args, opts);
    if (*enumerate) return run_enumerate(enum_path, opts);
    if (*verify) return run_verify(verify_args, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
