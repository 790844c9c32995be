#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "lieorb/linalg.hpp"
#include "lieorb/rational.hpp"

namespace lieorb {

enum class Family { A, B, C, D, E, F, G };

/// Simple type such as B3 or E8. Ranks are validated on construction.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  CartanType() = default;
  CartanType(Family f, int r);

  /// Parses "B3", "E8", "g2" etc.
  static CartanType parse(std::string_view text);

  std::string name() const;
  bool is_classical() const { return family <= Family::D; }
  bool operator==(const CartanType&) const = default;
};

char family_letter(Family f);

/// Integer coefficient vector in the simple-root basis.
using Root = Eigen::VectorXi;

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// All roots of a simple type, Bourbaki numbering of the simple roots.
///
/// Positive roots come first, sorted by height and then lexicographically on
/// the coefficient vector; the negatives follow in the same order, so the
/// negative of root i is root i + num_positive() (and conversely).
class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }

  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<int> index_of(const Root& coords) const;
  bool is_root(const Root& coords) const { return index_of(coords).has_value(); }
  int negative(int i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }
  bool is_positive(int i) const { return i < num_positive_; }
  int height(int i) const { return roots_[i].sum(); }
  int simple_index(int k) const;  // root index of alpha_{k+1} (k is 0-based)

  /// a_ij = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }
  /// Gram matrix of the simple roots, long roots of squared length 2.
  const RatMatrix& sym_form() const { return sym_; }

  Rational inner(const Root& a, const Root& b) const;
  Rational norm2(const Root& a) const { return inner(a, a); }
  bool is_long(const Root& a) const { return norm2(a) == Rational(2); }
  /// <r, alpha_i^vee>
  int pairing(const Root& r, int i) const;
  /// Coefficients of r^vee = 2r/(r,r) in the simple coroots.
  Root coroot_coords(const Root& r) const;
  /// Simple reflection s_i applied to r.
  Root reflect(const Root& r, int i) const;

  int highest_root_index() const { return highest_; }
  const Root& highest_root() const { return roots_[highest_]; }

  /// Orthonormal-model coordinates, hard-coded for F4 and E8 only.
  bool has_epsilon() const { return epsilon_.has_value(); }
  /// Rows are the simple roots in epsilon coordinates.
  const RatMatrix& epsilon_basis() const;
  RatVector to_epsilon(const Root& r) const;
  /// Simple-root coordinates of an epsilon-coordinate vector, if integral.
  std::optional<Root> from_epsilon(const RatVector& v) const;

 private:
  CartanType type_;
  Eigen::MatrixXi cartan_;
  RatMatrix sym_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  int highest_ = 0;
  std::unordered_map<Root, int, RootHash> index_;
  std::optional<RatMatrix> epsilon_;
};

Eigen::MatrixXi cartan_matrix(const CartanType& t);
RootSystem build_root_system(const CartanType& t);
Root highest_root(const RootSystem& rs);

/// Root facts used by the E-type exclusion argument.
struct ESigmaFacts {
  Root sigma;                   ///< sum of the simple roots
  std::array<int, 3> ends{};    ///< simple-root numbers (1-based) of the graph ends
  std::array<Root, 3> sigma_minus_end;
  bool sigma_is_root = false;
  std::array<bool, 3> minus_end_is_root{};
  /// Orthogonality of (sigma-e0, sigma-e1), (sigma-e0, sigma-e2), (sigma-e1, sigma-e2).
  std::array<bool, 3> orthogonal{};
};

ESigmaFacts e_type_sigma_facts(const RootSystem& rs);

}  // namespace lieorb
