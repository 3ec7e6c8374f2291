#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zinbiel/linear.hpp"

namespace zinbiel {

struct ZinbielAlgebra {
  std::size_t dim;
  BilMap mult;  // dim x dim -> dim
  ZinbielAlgebra(std::size_t n, BilMap m);
  static ZinbielAlgebra zero(const Field& f, std::size_t n) { return {n, BilMap::zero(f, n, n, n)}; }
  friend bool operator==(const ZinbielAlgebra& a, const ZinbielAlgebra& b) {
    return a.dim == b.dim && a.mult == b.mult;
  }
};

// left: Z x V -> V (⊳), right: V x Z -> V (⊲).
struct BimodulePair {
  BilMap left;
  BilMap right;
  static BimodulePair zero(const Field& f, std::size_t dimZ, std::size_t dimV) {
    return {BilMap::zero(f, dimZ, dimV, dimV), BilMap::zero(f, dimV, dimZ, dimV)};
  }
  friend bool operator==(const BimodulePair& a, const BimodulePair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// (Z1, Z0, phi) with Z0 acting on Z1.
struct ZinbielTwoAlgebra {
  ZinbielAlgebra Z1;
  ZinbielAlgebra Z0;
  LinMap phi;  // Z1 -> Z0
  BimodulePair act;
  ZinbielTwoAlgebra(ZinbielAlgebra z1, ZinbielAlgebra z0, LinMap ph, BimodulePair a);

  const Field& field() const { return phi.field(); }
  std::size_t dim1() const { return Z1.dim; }
  std::size_t dim0() const { return Z0.dim; }
  // The four bilinear operations indexed as in the extending-datum maps:
  // 0: Z0 x Z0 -> Z0, 1: Z1 x Z1 -> Z1, 2: Z0 x Z1 -> Z1 (⊳), 3: Z1 x Z0 -> Z1 (⊲).
  const BilMap& op(int j) const;
  std::size_t dim(int level) const { return level == 0 ? Z0.dim : Z1.dim; }

  friend bool operator==(const ZinbielTwoAlgebra& a, const ZinbielTwoAlgebra& b) {
    return a.Z1 == b.Z1 && a.Z0 == b.Z0 && a.phi == b.phi && a.act == b.act;
  }
};

// Argument and result levels of operation j: (a, b) -> c.
struct OpLevels {
  int a, b, c;
};
OpLevels op_levels(int j);
// Operation index for argument levels (a, b).
int op_index(int a, int b);

struct TwoMorphism {
  LinMap phi1;  // Z1 -> Z1'
  LinMap phi0;  // Z0 -> Z0'
  const LinMap& level(int i) const { return i == 0 ? phi0 : phi1; }
};

struct Violation {
  std::string id;
  std::vector<std::size_t> witness;  // 1-based basis indices
  std::vector<std::string> vars;     // names bound by the witness, if any
  Vec lhs, rhs;
};

// A remark attached to a report that does not affect its verdict.
struct Note {
  std::string id;
  std::string kind;  // e.g. "paper-typo-suspect"
  std::string detail;
};

struct CheckOptions {
  std::size_t violation_cap = 100;
};

// Natural order on condition IDs: digit runs compare numerically.
bool id_less(const std::string& a, const std::string& b);

class ConditionReport {
 public:
  explicit ConditionReport(std::size_t cap = 100) : cap_(cap) {}

  bool ok() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  std::size_t cap() const { return cap_; }
  bool truncated() const { return total_ > violations_.size(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<Note>& notes() const { return notes_; }
  bool conforming_field() const { return conforming_; }

  void record(Violation v);
  void note(Note n);
  void set_conforming(bool c) { conforming_ = conforming_ && c; }
  // Concatenate, then sort canonically by ID then witness; keeps the cap.
  void merge(const ConditionReport& other);
  // Merge with every ID prefixed.
  void merge_prefixed(const ConditionReport& other, const std::string& prefix);
  void canonicalize();
  // Every recorded violation ID (truncated lists cover at least the first cap).
  bool has_violation(const std::string& id) const;

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  bool conforming_ = true;
  std::vector<Violation> violations_;
  std::vector<Note> notes_;
};

struct PreconditionError : Error {
  ConditionReport report;
  PreconditionError(const std::string& what, ConditionReport r)
      : Error(what), report(std::move(r)) {}
};

ConditionReport check_zinbiel(const ZinbielAlgebra& A, const CheckOptions& opt = {});
ConditionReport check_bimodule(const ZinbielAlgebra& Z, std::size_t dimV, const BimodulePair& act,
                               const CheckOptions& opt = {});
ZinbielAlgebra semidirect_product(const ZinbielAlgebra& Z, std::size_t dimV, const BimodulePair& act);
ConditionReport check_action(const ZinbielAlgebra& Z0, const ZinbielAlgebra& Z1,
                             const BimodulePair& act, const CheckOptions& opt = {});
ConditionReport check_crossed_module(const ZinbielTwoAlgebra& T, const CheckOptions& opt = {});
ConditionReport check_2alg_morphism(const ZinbielTwoAlgebra& T, const ZinbielTwoAlgebra& Tp,
                                    const TwoMorphism& f, const CheckOptions& opt = {});

// Helpers used to build instances.
// (0, A, 0), (A, A, id) with the regular action, and the zero 2-algebra on a 2-vector space.
ZinbielTwoAlgebra zero_over(const ZinbielAlgebra& A);
ZinbielTwoAlgebra identity_crossed_module(const ZinbielAlgebra& A);
ZinbielTwoAlgebra two_vector_space_algebra(const TwoVectorSpace& V);
ZinbielTwoAlgebra direct_product(const ZinbielTwoAlgebra& A, const ZinbielTwoAlgebra& B);
// The structure T' making g = (g1, g0): T -> T' an isomorphism (g must be invertible).
ZinbielTwoAlgebra transport(const ZinbielTwoAlgebra& T, const LinMap& g1, const LinMap& g0);
ZinbielAlgebra transport(const ZinbielAlgebra& A, const LinMap& g);
bool is_isomorphism(const TwoMorphism& f);

}  // namespace zinbiel
