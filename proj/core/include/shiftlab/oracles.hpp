#pragma once

#include <cstdint>

#include "shiftlab/graph.hpp"

namespace shiftlab {

/// n = C(h, 2) + alpha with h >= alpha > 0; unique for every n >= 1.
struct BinomialForm {
  int h = 1;
  int alpha = 1;

  friend bool operator==(const BinomialForm&, const BinomialForm&) = default;
};

/// h is the largest integer with C(h, 2) < n. Throws InputError for n < 1.
BinomialForm binomial_form(int n);

/// Closed-form exterior shift profile of K_{a,b}, n = a + b:
/// m_{<=k} = k n - k^2 for k <= b, a b afterwards. Requires a >= b >= 1.
MProfile kab_exterior_profile(int a, int b);

/// Closed-form symmetric shift profile of K_{a,b}, with h = h(a + b):
///   C(n,2) - C(n-k,2)   if k <= b-1 and k <= h-2,
///   (k+1) n - (k+1)^2   if k <= b-1 and k >  h-2,
///   a b                 if k >  b-1.
/// Requires a >= b >= 1.
MProfile kab_symmetric_profile(int a, int b);

/// beta_{i,i+2} of the non-edge ideal of a shifted graph:
///   sum_s (n - s - m_s) * C(n - s - 1, i).
///
/// The binomial is C(n-s-1, i). The variant C(n-s, i) disagrees with direct
/// resolutions already on [3]: for the edgeless graph it gives 5 at i = 1
/// (true value 2), and for the star {12, 13} it gives 1 (true value 0, the
/// ideal is principal). Throws InputError for non-shifted g or i outside
/// [0, n-2].
std::uint64_t betti_shifted_formula(const Graph& g, int i);

/// Both sides of the bipartite sandwich, for k = 1..n-2:
///   e(k+1) >= s(k) >= e(k+1) - n + min(C(k+2, 2), n),
/// with e, s the exterior and symmetric profiles. Throws InputError when the
/// profile lengths disagree with n.
bool bipartite_sandwich_check(const MProfile& exterior, const MProfile& symmetric, int n);

/// {h(n), h(n)+1} is an edge of the given exterior shift. For a bipartite
/// source graph this forces the exterior and symmetric shifts to differ.
bool coro_predicate(const Graph& exterior_shift);

}  // namespace shiftlab
