#include "zinbiel/linear.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace zinbiel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimError(what);
}

// In-place reduced row echelon form on the first ncols columns (trailing
// columns are carried along); returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vec> rows_of(const LinMap& m) {
  std::vector<Vec> rows(m.cod_dim(), Vec());
  for (std::size_t r = 0; r < m.cod_dim(); ++r) {
    rows[r].reserve(m.dom_dim());
    for (std::size_t c = 0; c < m.dom_dim(); ++c) rows[r].push_back(m.at(r, c));
  }
  return rows;
}

}  // namespace

Vec zeros(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zeros(f, n);
  v.at(i) = f.one();
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector add: length " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector sub: length " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = c * x;
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

LinMap::LinMap(Field f, std::size_t cod, std::size_t dom)
    : field_(f), cod_(cod), dom_(dom), a_(cod * dom, f.zero()) {}

LinMap LinMap::identity(const Field& f, std::size_t n) {
  LinMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

LinMap LinMap::from_columns(const Field& f, std::size_t cod, const std::vector<Vec>& cols) {
  LinMap m(f, cod, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == cod, "from_columns: column length mismatch");
    for (std::size_t r = 0; r < cod; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

void LinMap::set(std::size_t r, std::size_t c, Scalar v) {
  require(r < cod_ && c < dom_, "LinMap::set index out of range");
  if (v.modulus() != field_.p()) throw FieldError("LinMap::set: scalar from another field");
  a_[r * dom_ + c] = std::move(v);
}

Vec LinMap::column(std::size_t c) const {
  Vec v;
  v.reserve(cod_);
  for (std::size_t r = 0; r < cod_; ++r) v.push_back(at(r, c));
  return v;
}

Vec LinMap::apply(const Vec& v) const {
  require(v.size() == dom_, "LinMap::apply: expected length " + std::to_string(dom_) + ", got " +
                                std::to_string(v.size()));
  Vec out = zeros(field_, cod_);
  for (std::size_t c = 0; c < dom_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < cod_; ++r) {
      const Scalar& m = at(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

bool LinMap::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool LinMap::is_identity() const { return cod_ == dom_ && *this == identity(field_, cod_); }

LinMap compose(const LinMap& a, const LinMap& b) {
  require(a.dom_dim() == b.cod_dim(), "compose: inner dimensions " + std::to_string(a.dom_dim()) +
                                          " vs " + std::to_string(b.cod_dim()));
  LinMap m(a.field(), a.cod_dim(), b.dom_dim());
  for (std::size_t r = 0; r < a.cod_dim(); ++r)
    for (std::size_t c = 0; c < b.dom_dim(); ++c) {
      Scalar s = a.field().zero();
      for (std::size_t k = 0; k < a.dom_dim(); ++k) s += a.at(r, k) * b.at(k, c);
      m.set(r, c, s);
    }
  return m;
}

LinMap add(const LinMap& a, const LinMap& b) {
  require(a.cod_dim() == b.cod_dim() && a.dom_dim() == b.dom_dim(), "LinMap add: shape mismatch");
  LinMap m(a.field(), a.cod_dim(), a.dom_dim());
  for (std::size_t r = 0; r < a.cod_dim(); ++r)
    for (std::size_t c = 0; c < a.dom_dim(); ++c) m.set(r, c, a.at(r, c) + b.at(r, c));
  return m;
}

std::size_t rank(const LinMap& m) {
  auto rows = rows_of(m);
  return rref(rows, m.dom_dim()).size();
}

std::optional<LinMap> inverse(const LinMap& m) {
  if (m.cod_dim() != m.dom_dim()) return std::nullopt;
  const std::size_t n = m.dom_dim();
  const Field& f = m.field();
  std::vector<Vec> rows = rows_of(m);
  for (std::size_t r = 0; r < n; ++r) {
    Vec e = unit(f, n, r);
    rows[r].insert(rows[r].end(), e.begin(), e.end());
  }
  auto piv = rref(rows, n);
  if (piv.size() != n) return std::nullopt;
  LinMap inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, rows[r][n + c]);
  return inv;
}

LinMap kernel_basis(const LinMap& m) {
  const Field& f = m.field();
  auto rows = rows_of(m);
  auto piv = rref(rows, m.dom_dim());
  std::vector<bool> is_piv(m.dom_dim(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> cols;
  for (std::size_t freec = 0; freec < m.dom_dim(); ++freec) {
    if (is_piv[freec]) continue;
    Vec v = unit(f, m.dom_dim(), freec);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][freec];
    cols.push_back(std::move(v));
  }
  return LinMap::from_columns(f, m.dom_dim(), cols);
}

LinMap hcat(const LinMap& a, const LinMap& b) {
  require(a.cod_dim() == b.cod_dim(), "hcat: codomain mismatch");
  LinMap m(a.field(), a.cod_dim(), a.dom_dim() + b.dom_dim());
  for (std::size_t r = 0; r < a.cod_dim(); ++r) {
    for (std::size_t c = 0; c < a.dom_dim(); ++c) m.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.dom_dim(); ++c) m.set(r, a.dom_dim() + c, b.at(r, c));
  }
  return m;
}

LinMap direct_sum(const LinMap& a, const LinMap& b) {
  LinMap m(a.field(), a.cod_dim() + b.cod_dim(), a.dom_dim() + b.dom_dim());
  for (std::size_t r = 0; r < a.cod_dim(); ++r)
    for (std::size_t c = 0; c < a.dom_dim(); ++c) m.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.cod_dim(); ++r)
    for (std::size_t c = 0; c < b.dom_dim(); ++c)
      m.set(a.cod_dim() + r, a.dom_dim() + c, b.at(r, c));
  return m;
}

BilMap::BilMap(Field f, std::size_t dimA, std::size_t dimB, std::size_t dimC)
    : field_(f), a_(dimA), b_(dimB), c_(dimC) {}

BilMap BilMap::from_entries(const Field& f, std::size_t a, std::size_t b, std::size_t c,
                            std::vector<Entry> entries) {
  BilMapBuilder builder(f, a, b, c);
  for (const auto& e : entries) builder.add(e.k, e.i, e.j, e.v);
  return builder.build();
}

Scalar BilMap::coeff(std::size_t k, std::size_t i, std::size_t j) const {
  require(k < c_ && i < a_ && j < b_, "BilMap::coeff index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::tuple(k, i, j),
                             [](const Entry& e, const std::tuple<std::size_t, std::size_t, std::size_t>& key) {
                               return std::tie(e.k, e.i, e.j) < key;
                             });
  if (it != entries_.end() && it->k == k && it->i == i && it->j == j) return it->v;
  return field_.zero();
}

Vec BilMap::eval(const Vec& a, const Vec& b) const {
  require(a.size() == a_ && b.size() == b_,
          "BilMap::eval: expected lengths (" + std::to_string(a_) + "," + std::to_string(b_) +
              "), got (" + std::to_string(a.size()) + "," + std::to_string(b.size()) + ")");
  Vec out = zeros(field_, c_);
  for (const auto& e : entries_) {
    if (a[e.i].is_zero() || b[e.j].is_zero()) continue;
    out[e.k] += e.v * a[e.i] * b[e.j];
  }
  return out;
}

Vec BilMap::eval_basis(std::size_t i, std::size_t j) const {
  require(i < a_ && j < b_, "BilMap::eval_basis index out of range");
  Vec out = zeros(field_, c_);
  for (const auto& e : entries_)
    if (e.i == i && e.j == j) out[e.k] = e.v;
  return out;
}

BilMapBuilder::BilMapBuilder(Field f, std::size_t a, std::size_t b, std::size_t c)
    : field_(f), a_(a), b_(b), c_(c), dense_(a * b * c, f.zero()) {}

void BilMapBuilder::add(std::size_t k, std::size_t i, std::size_t j, const Scalar& v) {
  require(k < c_ && i < a_ && j < b_,
          "structure constant index (" + std::to_string(k) + "," + std::to_string(i) + "," +
              std::to_string(j) + ") out of range");
  dense_[(k * a_ + i) * b_ + j] += v;
}

void BilMapBuilder::add_image(std::size_t i, std::size_t j, const Vec& val) {
  require(val.size() == c_, "BilMapBuilder::add_image: value length mismatch");
  for (std::size_t k = 0; k < c_; ++k)
    if (!val[k].is_zero()) add(k, i, j, val[k]);
}

BilMap BilMapBuilder::build() const {
  BilMap m(field_, a_, b_, c_);
  // Row-major (k,i,j) traversal yields the canonical key order.
  for (std::size_t k = 0; k < c_; ++k)
    for (std::size_t i = 0; i < a_; ++i)
      for (std::size_t j = 0; j < b_; ++j) {
        const Scalar& v = dense_[(k * a_ + i) * b_ + j];
        if (!v.is_zero()) m.entries_.push_back({k, i, j, v});
      }
  return m;
}

BilMap transform(const BilMap& m, const LinMap& g, const LinMap& f1, const LinMap& f2) {
  require(f1.cod_dim() == m.dimA() && f2.cod_dim() == m.dimB() && g.dom_dim() == m.dimC(),
          "BilMap transform: shape mismatch");
  BilMapBuilder b(m.field(), f1.dom_dim(), f2.dom_dim(), g.cod_dim());
  for (std::size_t i = 0; i < f1.dom_dim(); ++i)
    for (std::size_t j = 0; j < f2.dom_dim(); ++j)
      b.add_image(i, j, g.apply(m.eval(f1.column(i), f2.column(j))));
  return b.build();
}

TwoVectorSpace::TwoVectorSpace(std::size_t d1, std::size_t d0, LinMap dmap)
    : dim1(d1), dim0(d0), d(std::move(dmap)) {
  require(d.dom_dim() == d1 && d.cod_dim() == d0,
          "2-vector space: d must be " + std::to_string(d0) + "x" + std::to_string(d1));
}

}  // namespace zinbiel
