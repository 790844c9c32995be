#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieorb/diagram.hpp"
#include "lieorb/rootsys.hpp"

namespace lieorb {

using Partition = std::vector<int>;

/// Dimension of the standard representation: l+1, 2l+1, 2l, 2l for A, B, C, D.
int standard_dim(const CartanType& t);

/// Weakly decreasing positive parts summing to the standard dimension, with
/// even parts of even multiplicity (B, D) or odd parts of even multiplicity (C).
bool is_valid_partition(const CartanType& t, const Partition& p);
/// Type D partition with only even parts, each of even multiplicity.
bool is_very_even(const CartanType& t, const Partition& p);

/// All partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Transpose partition.
Partition dual_partition(const Partition& p);
/// Dominance: every partial sum of a is at most the matching partial sum of b.
bool dominates(const Partition& b, const Partition& a);

/// Classical nilpotent orbit labelled by its Jordan type.
///
/// Very even type D partitions carry a label 1 or 2 (the two orbits sharing
/// the partition); the label is 0 otherwise.
struct JordanOrbit {
  CartanType type;
  Partition partition;
  int label = 0;

  JordanOrbit(CartanType t, Partition p, int very_even_label = 0);
  /// "3,1,1", "2^2,1^3" or "2,2,2,2:II".
  static JordanOrbit parse(CartanType t, std::string_view text);

  bool is_zero() const;
  std::string str() const;
  bool operator==(const JordanOrbit&) const = default;
};

int orbit_dim(const JordanOrbit& o);
bool closure_leq(const JordanOrbit& a, const JordanOrbit& b);
WeightedDiagram weighted_diagram(const JordanOrbit& o);
/// Order of the fundamental group of the orbit (component group of the
/// centralizer in the simply connected group).
int pi1_order(const JordanOrbit& o);
JordanOrbit minimal_orbit(const CartanType& t);
JordanOrbit zero_orbit(const CartanType& t);

constexpr int kMaxEnumerationRank = 12;

/// Orbits of a classical type with the closure relation.
struct OrbitPoset {
  CartanType type;
  std::vector<JordanOrbit> orbits;
  std::vector<std::vector<bool>> leq;  ///< leq[i][j]: orbit i lies in the closure of orbit j

  int index_of(const JordanOrbit& o) const;
  /// Orbits j < i in the order with nothing strictly between them.
  std::vector<int> covered_by(int i) const;
  std::vector<int> covers_of(int i) const;
  /// Nonzero orbits with no nonzero orbit strictly below them.
  std::vector<int> minimal_nonzero() const;
};

OrbitPoset enumerate_orbits(const CartanType& t);
/// min over maximal proper suborbits of the dimension drop; nullopt for the zero orbit.
std::optional<int> boundary_codim(const OrbitPoset& poset, int i);
std::optional<int> boundary_codim(const JordanOrbit& o);

}  // namespace lieorb
