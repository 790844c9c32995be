#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lieorb/linalg.hpp"
#include "lieorb/rational.hpp"
#include "lieorb/rootsys.hpp"

namespace lieorb {

/// Element of a Chevalley algebra as a sparse coefficient vector.
///
/// Zero coefficients are never stored, so two elements of the same algebra
/// are equal exactly when their term maps are equal.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(std::uint64_t algebra) : algebra_(algebra) {}

  std::uint64_t algebra() const { return algebra_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int k) const;
  void add(int k, const Rational& c);

  RatVector dense(int dim) const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

 private:
  void check_same(const LieElement& o) const;

  std::uint64_t algebra_ = 0;
  std::map<int, Rational> terms_;
};

/// Simple Lie algebra in a Chevalley basis {X_r} u {H_i}.
///
/// Basis index k < |roots| is X_{root k}; index |roots| + i is H_i, the
/// coroot of the simple root alpha_{i+1}. Structure constants follow the
/// extraspecial-pair convention: for every positive non-simple root xi the
/// pair (a, xi - a), with a the first positive root in the root order such
/// that xi - a is a root, has N = +(p+1). Relations used:
///   [X_r, X_s] = N_{r,s} X_{r+s},  [X_r, X_{-r}] = H_r,  [H_i, X_r] = <r, a_i^vee> X_r,
///   N_{-r,-s} = -N_{r,s}.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  const CartanType& type() const { return rs_.type(); }
  std::uint64_t id() const { return id_; }
  int dim() const { return rs_.size() + rs_.rank(); }
  int rank() const { return rs_.rank(); }
  int num_roots() const { return rs_.size(); }
  bool is_cartan_index(int k) const { return k >= rs_.size(); }

  int structure_constant(int r, int s) const { return n_[r * rs_.size() + s]; }
  /// Root index of r + s, or -1.
  int root_sum(int r, int s) const { return sum_[r * rs_.size() + s]; }

  LieElement zero() const { return LieElement(id_); }
  LieElement basis(int k) const;
  LieElement X(int root_index) const { return basis(root_index); }
  LieElement X(const Root& coords) const;
  LieElement H(int i) const { return basis(rs_.size() + i); }
  /// H_r = [X_r, X_{-r}] expanded over the H_i.
  LieElement coroot(int root_index) const;
  LieElement from_dense(const RatVector& v) const;

  /// Nonzero terms of [b_i, b_j] for basis indices i, j.
  std::vector<std::pair<int, int>> basis_bracket(int i, int j) const;
  std::string basis_label(int k) const;

  /// ad of basis element k, cached at construction.
  const RatSparse& ad_basis(int k) const { return ad_[k]; }

  void check(const LieElement& a) const;

 private:
  void build_structure_constants();
  void verify_sample() const;

  RootSystem rs_;
  std::uint64_t id_;
  std::vector<int> n_;
  std::vector<int> sum_;
  std::vector<Root> coroots_;
  std::vector<RatSparse> ad_;
};

ChevalleyAlgebra build_algebra(const RootSystem& rs);
ChevalleyAlgebra build_algebra(const CartanType& t);

LieElement bracket(const ChevalleyAlgebra& g, const LieElement& a, const LieElement& b);
RatSparse ad_matrix(const ChevalleyAlgebra& g, const LieElement& a);
Rational killing(const ChevalleyAlgebra& g, const LieElement& a, const LieElement& b);
/// Killing form trace(ad A ad B) of two matrices in the adjoint representation.
Rational trace_product(const RatSparse& a, const RatSparse& b);
/// Gram matrix of the Killing form on the given basis indices.
RatMatrix killing_gram(const ChevalleyAlgebra& g, const std::vector<int>& rows, const std::vector<int>& cols);

/// Basis of the centralizer of a, one column per vector (dense coordinates).
RatMatrix centralizer(const ChevalleyAlgebra& g, const LieElement& a);
int orbit_dimension(const ChevalleyAlgebra& g, const LieElement& a);
int projective_orbit_dimension(const ChevalleyAlgebra& g, const LieElement& a);

/// exp(ad x)(y) for ad-nilpotent x; throws std::invalid_argument otherwise.
LieElement exp_ad(const ChevalleyAlgebra& g, const LieElement& x, const LieElement& y);

/// Whether ad(a) is nilpotent. Stops as soon as the ranks of the powers
/// stabilize, so semisimple parts never get raised to high powers.
bool is_ad_nilpotent(const ChevalleyAlgebra& g, const LieElement& a);

/// Whether ad(a)^k = 0.
bool ad_power_vanishes(const ChevalleyAlgebra& g, const LieElement& a, int k);

}  // namespace lieorb
