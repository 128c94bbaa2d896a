#include "shiftlab/oracles.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

void require_ordered(int a, int b) {
  if (b < 1 || a < b) {
    throw InputError("complete bipartite oracle requires a >= b >= 1, got a=" +
                     std::to_string(a) + ", b=" + std::to_string(b));
  }
}

}  // namespace

BinomialForm binomial_form(int n) {
  if (n < 1) throw InputError("binomial_form requires n >= 1");
  int h = 1;
  while (choose2(h + 1) < n) ++h;
  return BinomialForm{h, n - static_cast<int>(choose2(h))};
}

MProfile kab_exterior_profile(int a, int b) {
  require_ordered(a, b);
  const int n = a + b;
  std::vector<int> cum;
  for (int k = 1; k <= n - 1; ++k) cum.push_back(k <= b ? k * n - k * k : a * b);
  return MProfile::from_cumulative(n, std::move(cum));
}

MProfile kab_symmetric_profile(int a, int b) {
  require_ordered(a, b);
  const int n = a + b;
  const int h = binomial_form(n).h;
  std::vector<int> cum;
  for (int k = 1; k <= n - 1; ++k) {
    if (k > b - 1) {
      cum.push_back(a * b);
    } else if (k <= h - 2) {
      cum.push_back(static_cast<int>(choose2(n) - choose2(n - k)));
    } else {
      cum.push_back((k + 1) * n - (k + 1) * (k + 1));
    }
  }
  return MProfile::from_cumulative(n, std::move(cum));
}

std::uint64_t betti_shifted_formula(const Graph& g, int i) {
  const int n = g.n();
  if (i < 0 || i > n - 2) throw InputError("betti_shifted_formula requires 0 <= i <= n-2");
  const MProfile p = m_profile(g);
  std::uint64_t total = 0;
  for (int s = 1; s <= n - 1; ++s) {
    const auto non_edges = static_cast<std::uint64_t>(n - s - p.increment(s));
    total += non_edges * binomial(n - s - 1, i);
  }
  return total;
}

bool bipartite_sandwich_check(const MProfile& exterior, const MProfile& symmetric, int n) {
  if (exterior.n() != n || symmetric.n() != n) {
    throw InputError("sandwich check: profiles must both have n = " + std::to_string(n));
  }
  for (int k = 1; k <= n - 2; ++k) {
    const int upper = exterior.at_most(k + 1);
    const int lower =
        upper - n + static_cast<int>(std::min<std::int64_t>(choose2(k + 2), n));
    const int s = symmetric.at_most(k);
    if (s > upper || s < lower) return false;
  }
  return true;
}

bool coro_predicate(const Graph& exterior_shift) {
  const int h = binomial_form(exterior_shift.n()).h;
  return exterior_shift.has_edge(h, h + 1);
}

}  // namespace shiftlab
