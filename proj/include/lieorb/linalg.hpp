#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "lieorb/rational.hpp"

namespace lieorb {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using RatSparse = SparseMatrix<Rational>;

namespace linalg {

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a unit pivot and is zero in the pivot columns of all
/// other stored rows, so reducing a new row needs a single pass.
template <typename Scalar>
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow<Scalar>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_pivot(int c) const { return pivot_row_[c] >= 0; }
  int pivot_row(int c) const { return pivot_row_[c]; }

  /// Reduces `row` against the stored rows; returns the residual.
  SparseRow<Scalar> reduce(const SparseRow<Scalar>& row) const {
    std::map<int, Scalar> acc;
    for (const auto& [c, v] : row) acc[c] += v;
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& [c, v] : acc)
      if (pivot_row_[c] >= 0 && v != Scalar(0)) hits.emplace_back(c, v);
    for (const auto& [c, v] : hits) {
      for (const auto& [pc, pv] : rows_[pivot_row_[c]]) acc[pc] -= v * pv;
    }
    SparseRow<Scalar> out;
    for (const auto& [c, v] : acc)
      if (v != Scalar(0)) out.emplace_back(c, v);
    return out;
  }

  /// Adds a row; returns true if it increased the rank.
  bool add(const SparseRow<Scalar>& row) {
    SparseRow<Scalar> r = reduce(row);
    if (r.empty()) return false;
    const int pc = r.front().first;
    const Scalar inv = Scalar(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
    // clear the new pivot column from the existing rows
    for (auto& other : rows_) {
      auto it = std::lower_bound(other.begin(), other.end(), pc,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == other.end() || it->first != pc) continue;
      const Scalar f = it->second;
      std::map<int, Scalar> acc(other.begin(), other.end());
      for (const auto& [c, v] : r) acc[c] -= f * v;
      other.clear();
      for (const auto& [c, v] : acc)
        if (v != Scalar(0)) other.emplace_back(c, v);
    }
    pivot_row_[pc] = static_cast<int>(rows_.size());
    pivots_.push_back(pc);
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  int cols_;
  std::vector<SparseRow<Scalar>> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

template <typename Scalar>
SparseRow<Scalar> row_of(const SparseMatrix<Scalar>& a, int i) {
  SparseRow<Scalar> r;
  for (typename SparseMatrix<Scalar>::InnerIterator it(a, i); it; ++it)
    if (it.value() != Scalar(0)) r.emplace_back(static_cast<int>(it.col()), it.value());
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

template <typename Derived>
SparseRow<typename Derived::Scalar> row_of(const Eigen::MatrixBase<Derived>& a, Eigen::Index i) {
  using Scalar = typename Derived::Scalar;
  SparseRow<Scalar> r;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (a(i, j) != Scalar(0)) r.emplace_back(static_cast<int>(j), a(i, j));
  return r;
}

template <typename Scalar>
Echelon<Scalar> echelon(const SparseMatrix<Scalar>& a) {
  Echelon<Scalar> e(static_cast<int>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) e.add(row_of(a, static_cast<int>(i)));
  return e;
}

template <typename Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& a) {
  Echelon<typename Derived::Scalar> e(static_cast<int>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) e.add(row_of(a, i));
  return e;
}

/// Null-space basis read off a reduced echelon form, one column per free variable.
template <typename Scalar>
Matrix<Scalar> kernel_from_echelon(const Echelon<Scalar>& e) {
  const int n = e.cols();
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!e.is_pivot(c)) free.push_back(c);
  Matrix<Scalar> k = Matrix<Scalar>::Zero(n, static_cast<Eigen::Index>(free.size()));
  std::vector<int> free_pos(n, -1);
  for (std::size_t j = 0; j < free.size(); ++j) {
    free_pos[free[j]] = static_cast<int>(j);
    k(free[j], static_cast<Eigen::Index>(j)) = Scalar(1);
  }
  for (std::size_t r = 0; r < e.rows().size(); ++r) {
    const int pc = e.pivots()[r];
    for (const auto& [c, v] : e.rows()[r])
      if (c != pc) k(pc, free_pos[c]) = -v;
  }
  return k;
}

template <typename Scalar>
Matrix<Scalar> kernel(const SparseMatrix<Scalar>& a) {
  return kernel_from_echelon(echelon(a));
}

template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  return kernel_from_echelon(echelon(a));
}

template <typename Scalar>
int rank(const SparseMatrix<Scalar>& a) {
  return echelon(a).rank();
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& a) {
  return echelon(a).rank();
}

/// Particular solution of a x = b, or nullopt when the system is inconsistent.
template <typename Derived, typename VDerived>
std::optional<Vector<typename Derived::Scalar>> solve(const Eigen::MatrixBase<Derived>& a,
                                                      const Eigen::MatrixBase<VDerived>& b) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(a.cols());
  Echelon<Scalar> e(n + 1);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    auto r = row_of(a, i);
    if (b(i) != Scalar(0)) r.emplace_back(n, b(i));
    e.add(r);
  }
  if (e.is_pivot(n)) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(n);
  for (std::size_t r = 0; r < e.rows().size(); ++r) {
    const auto& row = e.rows()[r];
    if (!row.empty() && row.back().first == n) x(e.pivots()[r]) = row.back().second;
  }
  return x;
}

template <typename Scalar>
std::optional<Vector<Scalar>> solve(const SparseMatrix<Scalar>& a, const Vector<Scalar>& b) {
  const int n = static_cast<int>(a.cols());
  Echelon<Scalar> e(n + 1);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    auto r = row_of(a, static_cast<int>(i));
    if (b(i) != Scalar(0)) r.emplace_back(n, b(i));
    e.add(r);
  }
  if (e.is_pivot(n)) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(n);
  for (std::size_t r = 0; r < e.rows().size(); ++r) {
    const auto& row = e.rows()[r];
    if (!row.empty() && row.back().first == n) x(e.pivots()[r]) = row.back().second;
  }
  return x;
}

/// Whether `v` lies in the column span of `basis`.
template <typename Derived, typename VDerived>
bool in_span(const Eigen::MatrixBase<Derived>& basis, const Eigen::MatrixBase<VDerived>& v) {
  return solve(basis, v).has_value();
}

template <typename Scalar>
SparseMatrix<Scalar> sparse_product(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
  SparseMatrix<Scalar> c = a * b;
  c.prune([](Eigen::Index, Eigen::Index, const Scalar& v) { return v != Scalar(0); });
  return c;
}

}  // namespace linalg
}  // namespace lieorb
