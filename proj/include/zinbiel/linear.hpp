#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zinbiel/field.hpp"

namespace zinbiel {

using Vec = std::vector<Scalar>;

Vec zeros(const Field& f, std::size_t n);
Vec unit(const Field& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);
// a followed by b.
Vec concat(const Vec& a, const Vec& b);

// Dense cod_dim x dom_dim matrix acting on column vectors.
class LinMap {
 public:
  LinMap(Field f, std::size_t cod, std::size_t dom);  // zero map
  static LinMap zero(const Field& f, std::size_t cod, std::size_t dom) { return LinMap(f, cod, dom); }
  static LinMap identity(const Field& f, std::size_t n);
  // Columns are images of the basis vectors; all must have length cod.
  static LinMap from_columns(const Field& f, std::size_t cod, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t cod_dim() const { return cod_; }
  std::size_t dom_dim() const { return dom_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * dom_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v);
  Vec column(std::size_t c) const;

  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.field_ == b.field_ && a.a_ == b.a_;
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t cod_, dom_;
  std::vector<Scalar> a_;
};

// a ∘ b.
LinMap compose(const LinMap& a, const LinMap& b);
LinMap add(const LinMap& a, const LinMap& b);
std::size_t rank(const LinMap& m);
std::optional<LinMap> inverse(const LinMap& m);
// Columns form a basis of the kernel (reduced echelon order).
LinMap kernel_basis(const LinMap& m);
// Block matrix [a | b] with equal codomains.
LinMap hcat(const LinMap& a, const LinMap& b);
// Block-diagonal a ⊕ b.
LinMap direct_sum(const LinMap& a, const LinMap& b);

// Bilinear map A x B -> C stored as the sorted list of non-zero structure
// constants c[k][i][j] = (eval(e_i, e_j))_k, keyed lexicographically by (k,i,j).
class BilMap {
 public:
  struct Entry {
    std::size_t k, i, j;
    Scalar v;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.k == b.k && a.i == b.i && a.j == b.j && a.v == b.v;
    }
  };

  BilMap(Field f, std::size_t dimA, std::size_t dimB, std::size_t dimC);  // zero map
  static BilMap zero(const Field& f, std::size_t a, std::size_t b, std::size_t c) {
    return BilMap(f, a, b, c);
  }
  // Entries in any order; duplicates are summed, zeros dropped.
  static BilMap from_entries(const Field& f, std::size_t a, std::size_t b, std::size_t c,
                             std::vector<Entry> entries);

  const Field& field() const { return field_; }
  std::size_t dimA() const { return a_; }
  std::size_t dimB() const { return b_; }
  std::size_t dimC() const { return c_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar coeff(std::size_t k, std::size_t i, std::size_t j) const;
  Vec eval(const Vec& a, const Vec& b) const;
  // eval(e_i, e_j) without building unit vectors.
  Vec eval_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const BilMap& x, const BilMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.field_ == y.field_ &&
           x.entries_ == y.entries_;
  }
  friend bool operator!=(const BilMap& x, const BilMap& y) { return !(x == y); }

 private:
  friend class BilMapBuilder;
  Field field_;
  std::size_t a_, b_, c_;
  std::vector<Entry> entries_;
};

// Accumulates structure constants densely, then emits a canonical BilMap.
class BilMapBuilder {
 public:
  BilMapBuilder(Field f, std::size_t a, std::size_t b, std::size_t c);
  void add(std::size_t k, std::size_t i, std::size_t j, const Scalar& v);
  // Adds val as the image of (e_i, e_j).
  void add_image(std::size_t i, std::size_t j, const Vec& val);
  BilMap build() const;

 private:
  Field field_;
  std::size_t a_, b_, c_;
  std::vector<Scalar> dense_;
};

// Change of basis: returns the map (x, y) -> g(B(f1 x, f2 y)).
BilMap transform(const BilMap& m, const LinMap& g, const LinMap& f1, const LinMap& f2);

struct TwoVectorSpace {
  std::size_t dim1 = 0, dim0 = 0;
  LinMap d;
  TwoVectorSpace(std::size_t d1, std::size_t d0, LinMap dmap);
  static TwoVectorSpace zero_d(const Field& f, std::size_t d1, std::size_t d0) {
    return TwoVectorSpace(d1, d0, LinMap::zero(f, d0, d1));
  }
  friend bool operator==(const TwoVectorSpace& a, const TwoVectorSpace& b) {
    return a.dim1 == b.dim1 && a.dim0 == b.dim0 && a.d == b.d;
  }
};

}  // namespace zinbiel
