#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieorb/rootsys.hpp"

namespace lieorb {

/// Labels alpha_i(H) on the Bourbaki-numbered nodes, each in {0, 1, 2}.
struct WeightedDiagram {
  CartanType type;
  std::vector<int> labels;

  WeightedDiagram(CartanType t, std::vector<int> l);
  static WeightedDiagram zero(CartanType t) { return {t, std::vector<int>(t.rank, 0)}; }
  /// Comma-separated labels, e.g. "0,1".
  static WeightedDiagram parse(CartanType t, std::string_view text);

  std::string str() const;
  /// Value r(H) of a root on the Cartan element the diagram describes.
  int value(const Root& r) const;
  bool operator==(const WeightedDiagram&) const = default;
};

std::vector<int> parse_int_list(std::string_view text);

}  // namespace lieorb
