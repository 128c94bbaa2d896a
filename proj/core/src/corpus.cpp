#include "shiftlab/corpus.hpp"

#include <numeric>

#include "shiftlab/errors.hpp"
#include "shiftlab/random.hpp"

namespace shiftlab {

namespace {

std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(sigma[i], sigma[j]);
  }
  return sigma;
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.bernoulli(p)) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

Graph random_chordal(int n, double p, Rng& rng) {
  // attach[v] is the clique v joined when it was placed.
  std::vector<std::vector<Vertex>> attach(static_cast<std::size_t>(n) + 1);
  std::vector<std::pair<int, int>> pairs;
  for (Vertex v = 2; v <= n; ++v) {
    const auto w = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(v - 1)));
    std::vector<Vertex> clique = attach[w];
    clique.push_back(w);
    for (Vertex c : clique) {
      if (rng.bernoulli(p)) {
        attach[v].push_back(c);
        pairs.emplace_back(c, v);
      }
    }
  }
  const Graph placed(n, pairs);
  const auto sigma = random_permutation(n, rng);
  return apply_permutation(placed, sigma);
}

Graph random_bipartite(int n, double p, Rng& rng) {
  std::vector<bool> side(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) side[v] = rng.bernoulli(0.5);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (side[i] != side[j] && rng.bernoulli(p)) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

}  // namespace

void CorpusSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("corpus: p must lie in [0, 1]");
  if (count < 1) throw InputError("corpus: count must be at least 1");
  if (model == CorpusModel::kab) {
    if (a < 1 || b < 1) throw InputError("corpus: a and b must be at least 1");
  } else if (n < 1) {
    throw InputError("corpus: n must be at least 1");
  }
}

CorpusModel parse_corpus_model(const std::string& name) {
  if (name == "gnp") return CorpusModel::gnp;
  if (name == "chordal") return CorpusModel::chordal;
  if (name == "bipartite") return CorpusModel::bipartite;
  if (name == "kab") return CorpusModel::kab;
  throw InputError("unknown corpus model '" + name + "' (gnp|chordal|bipartite|kab)");
}

const char* to_string(CorpusModel m) {
  switch (m) {
    case CorpusModel::gnp:
      return "gnp";
    case CorpusModel::chordal:
      return "chordal";
    case CorpusModel::bipartite:
      return "bipartite";
    case CorpusModel::kab:
      return "kab";
  }
  return "gnp";
}

std::vector<Graph> gen_corpus(const CorpusSpec& spec) {
  spec.validate();
  if (spec.model == CorpusModel::kab) return {complete_bipartite(spec.a, spec.b)};
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int index = 0; index < spec.count; ++index) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(index)));
    switch (spec.model) {
      case CorpusModel::gnp:
        out.push_back(random_gnp(spec.n, spec.p, rng));
        break;
      case CorpusModel::chordal:
        out.push_back(random_chordal(spec.n, spec.p, rng));
        break;
      case CorpusModel::bipartite:
        out.push_back(random_bipartite(spec.n, spec.p, rng));
        break;
      case CorpusModel::kab:
        break;
    }
  }
  return out;
}

}  // namespace shiftlab
