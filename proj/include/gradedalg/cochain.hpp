#pragma once

#include <map>
#include <optional>

#include "gradedalg/matrix.hpp"
#include "gradedalg/space.hpp"

namespace gradedalg {

/// One arity of a cochain: a homogeneous multilinear map, stored by its
/// values on canonical monomials. Values are coefficient vectors over the
/// codomain basis (length 1 for scalar codomain).
struct Component {
  Parity parity = 0;
  std::map<Word, Vec> values;

  bool operator==(const Component&) const = default;
};

/// Finitely supported family {m_k} of multilinear maps of one flavor with
/// codomain V or the ground field. Immutable once built apart from the
/// set_value/add construction helpers, which validate canonicity and
/// parity homogeneity per arity.
struct Cochain {
  GradedSpace space;
  Flavor flavor = Flavor::Ext;
  bool scalar = false;
  std::map<int, Component> comps;

  int codim() const { return scalar ? 1 : space.dim(); }
  bool is_zero() const { return comps.empty(); }
  std::vector<int> arities() const;
  Bidegree bidegree(int arity) const;  // (component parity, arity-1)

  /// Parity of a single-parity cochain; throws if components disagree.
  Parity parity() const;

  /// Inserts value at a canonical monomial, validating parity homogeneity.
  void set_value(int arity, Parity map_parity, const Word& mono, Vec value);

  /// Flavor-aware evaluation: normalizes the argument tuple, scales the
  /// stored canonical value by the normalization sign. Zero vector when
  /// nothing is stored.
  Vec evaluate(const Word& args) const;

  Cochain& add_scaled(const Cochain& o, const Rat& c);
  Cochain& scale(const Rat& c);
  void prune();

  bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const GradedSpace& sp, Flavor f, bool scalar);

/// Equality as multilinear maps (evaluation on every basis tuple of every
/// stored arity), regardless of container layout.
bool multilinear_equal(const Cochain& a, const Cochain& b);

/// Even, graded-symmetric, nondegenerate bilinear form as an exact matrix.
struct InnerProduct {
  GradedSpace space;
  Matrix gram;
  Matrix inv_gram_t;  // (gram^T)^{-1}, used by untilde
};

InnerProduct make_inner_product(const GradedSpace& sp, Matrix gram);

/// <v, e_j> for a coefficient vector v.
Rat ip_left(const InnerProduct& ip, const Vec& v, int j);
/// <e_i, v>.
Rat ip_right(const InnerProduct& ip, int i, const Vec& v);

/// phit(v_1..v_{k+1}) = <phi(v_1..v_k), v_{k+1}> as a scalar tensor-flavor
/// cochain; defined for every vector cochain, cyclic or not.
Cochain tilde(const Cochain& phi, const InnerProduct& ip);

/// Inverse of tilde. Tensor-flavor input yields the unique vector cochain
/// with that tilde; ext-flavor input (a graded-antisymmetric scalar
/// cochain) yields the cyclic vector cochain it came from.
Cochain untilde(const Cochain& f, const InnerProduct& ip);

/// For cyclic ext-flavor phi: its tilde stored on canonical exterior
/// monomials, i.e. the corresponding scalar ext cochain of arity +1.
Cochain ext_scalar_from_tilde(const Cochain& phi, const InnerProduct& ip);

struct CyclicReport {
  bool cyclic = true;
  int arity = 0;       // of the first counterexample
  Word counterexample; // k+1 basis indices
};

/// Checks <phi(v_1..v_k), v_{k+1}> = (-1)^{k + |v_1||phi|} <v_1, phi(v_2..v_{k+1})>
/// on every basis tuple of every stored arity.
CyclicReport is_cyclic(const Cochain& phi, const InnerProduct& ip);

/// Rotation invariance of a scalar tensor cochain:
/// f(v_1..v_N) = (-1)^{N-1 + |v_N|(|v_1|+...+|v_{N-1}|)} f(v_N, v_1..v_{N-1}).
CyclicReport is_cyclic_scalar(const Cochain& f);

}  // namespace gradedalg
