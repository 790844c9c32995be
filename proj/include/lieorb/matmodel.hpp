#pragma once

#include <optional>
#include <vector>

#include "lieorb/linalg.hpp"
#include "lieorb/partitions.hpp"

namespace lieorb {

/// Standard alternating form [[0, I], [-I, 0]] on Scalar^{2n}.
template <typename Scalar>
Matrix<Scalar> standard_symplectic_form(int n) {
  Matrix<Scalar> j = Matrix<Scalar>::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = Scalar(1);
    j(n + i, i) = Scalar(-1);
  }
  return j;
}

/// Whether X preserves the form: X^T J + J X = 0.
template <typename Derived, typename FDerived>
bool preserves_form(const Eigen::MatrixBase<Derived>& x, const Eigen::MatrixBase<FDerived>& form) {
  return (x.transpose() * form + form * x).isZero(0);
}

struct SymplecticSpace {
  int n = 1;
  RatMatrix form;

  explicit SymplecticSpace(int n);
  int dim() const { return 2 * n; }
  Rational omega(const RatVector& u, const RatVector& w) const { return u.dot(form * w); }
};

/// The endomorphism u -> omega(v, u) v, i.e. the matrix v v^T J.
struct RankOneElement {
  RatVector v;
  RatMatrix matrix;
};

RankOneElement mu(const SymplecticSpace& space, const RatVector& v);

/// Every w with mu(w) = x, solved exactly over the rationals.
std::vector<RatVector> mu_fiber(const SymplecticSpace& space, const RatMatrix& x);

/// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition jordan_type(const RatMatrix& x);

/// Rank of (X, Y) -> tr(mu(v) [X, Y]) on sp(2n).
int kk_rank_at(const SymplecticSpace& space, const RatVector& v);

/// Basis X = J S (S symmetric) of sp(2n).
std::vector<RatMatrix> sp_basis(const SymplecticSpace& space);

/// Fiber of the product map P(V_1 + ... + V_k) -> P(O_1 x ... x O_k) over a
/// sample point, with its points listed modulo the global sign.
struct ProductCover {
  std::vector<int> ns;
  int ambient_n = 0;  ///< sum of the n_i: the source is P^{2n-1}
  RatVector sample;
  std::vector<RatVector> fiber;
  int degree() const { return static_cast<int>(fiber.size()); }
};

ProductCover product_cover(const std::vector<int>& ns);
inline int product_cover_degree(const std::vector<int>& ns) { return product_cover(ns).degree(); }

/// Minimal nilpotent orbit of sp(2n) as a Jordan orbit; sp(2) is labelled
/// through sl(2), whose partition calculus agrees.
JordanOrbit sp_minimal_orbit(int n);

/// Fixed vector with all coordinates nonzero: (1, 2, ..., n, -1, -3, ...).
RatVector fixture_vector(int n, int shift = 0);

}  // namespace lieorb
