#include "census_oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace zinbiel::testing {

namespace {

constexpr int P = 5;
using Table = std::array<std::array<std::array<int, 2>, 2>, 2>;  // m[i][j][k]: coeff of e_k in e_i·e_j

Table table(const std::array<int, 6>& s) {
  Table m{};
  m[0][1] = {s[0], s[1]};
  m[1][0] = {s[2], s[3]};
  m[1][1] = {s[4], s[5]};
  return m;
}

int md(long v) { return static_cast<int>(((v % P) + P) % P); }

std::array<int, 2> mul(const Table& m, std::array<int, 2> a, std::array<int, 2> b) {
  std::array<int, 2> r{0, 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[k] = md(r[k] + a[i] * b[j] * m[i][j][k]);
  return r;
}

bool zinbiel(const Table& m) {
  const std::array<int, 2> e[2] = {{1, 0}, {0, 1}};
  for (auto x : e)
    for (auto y : e)
      for (auto z : e) {
        auto yz = mul(m, y, z), zy = mul(m, z, y);
        if (mul(m, mul(m, x, y), z) != mul(m, x, {md(yz[0] + zy[0]), md(yz[1] + zy[1])})) return false;
      }
  return true;
}

// g(x) = x, g(u) = r x + s u is an isomorphism E -> E'.
bool iso(const Table& a, const Table& b, int r, int s) {
  auto g = [&](std::array<int, 2> v) { return std::array<int, 2>{md(v[0] + r * v[1]), md(s * v[1])}; };
  const std::array<int, 2> e[2] = {{1, 0}, {0, 1}};
  for (auto x : e)
    for (auto y : e)
      if (g(mul(a, x, y)) != mul(b, g(x), g(y))) return false;
  return true;
}

}  // namespace

OracleCensus oracle_census() {
  std::vector<Table> valid;
  for (int code = 0; code < P * P * P * P * P * P; ++code) {
    std::array<int, 6> s;
    for (int i = 5, c = code; i >= 0; --i, c /= P) s[i] = c % P;
    Table m = table(s);
    if (zinbiel(m)) valid.push_back(m);
  }
  auto orbits = [&](bool fix_s, std::vector<int>* sizes) {
    std::vector<int> rep(valid.size());
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int i) { return rep[i] == i ? i : rep[i] = find(rep[i]); };
    for (std::size_t i = 0; i < valid.size(); ++i)
      for (std::size_t j = 0; j < valid.size(); ++j)
        for (int r = 0; r < P; ++r)
          for (int s = 1; s < P; ++s)
            if ((!fix_s || s == 1) && iso(valid[i], valid[j], r, s)) rep[find(i)] = find(j);
    std::map<int, int> count;
    for (std::size_t i = 0; i < valid.size(); ++i) ++count[find(i)];
    if (sizes) {
      for (auto& [k, n] : count) sizes->push_back(n);
      std::sort(sizes->begin(), sizes->end());
    }
    return static_cast<int>(count.size());
  };
  OracleCensus out;
  out.valid = static_cast<int>(valid.size());
  out.equivalent_orbits = orbits(false, &out.equivalent_sizes);
  out.cohomologous_orbits = orbits(true, nullptr);
  return out;
}

}  // namespace zinbiel::testing
