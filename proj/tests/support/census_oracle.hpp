#pragma once

#include <vector>

namespace zinbiel::testing {

// Hand-coded census over GF(5) for Z = (0, 1-dim zero algebra), V = (0, 1).
// With Z1 = V1 = 0 the unified product is the 2-dim algebra E0 on (x, u):
//   x·x = 0, x·u = a x + b u, u·x = c x + e u, u·u = w x + t u,
// with (a, b, c, e, w, t) = (↼, ⊳, ⇀, ⊲, ω, *) at j = 0. Data are related by
// g(x) = x, g(u) = r x + s u (s = 1 for the cohomologous relation).
struct OracleCensus {
  int valid = 0;
  int equivalent_orbits = 0;
  int cohomologous_orbits = 0;
  std::vector<int> equivalent_sizes;  // ascending
};

OracleCensus oracle_census();

}  // namespace zinbiel::testing
