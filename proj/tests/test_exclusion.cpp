#include <doctest.h>

#include <algorithm>

#include "lieorb/exclusion.hpp"

using namespace lieorb;

namespace {

std::vector<std::vector<int>> all_labels(int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rank, 0);
  for (;;) {
    out.push_back(cur);
    int i = rank - 1;
    while (i >= 0 && cur[i] == 2) cur[i--] = 0;
    if (i < 0) return out;
    ++cur[i];
  }
}

void check_excluded(const ChevalleyAlgebra& g, const WeightedDiagram& wd, const ExclusionVerdict& v) {
  REQUIRE(v.n);
  REQUIRE(v.z);
  const Grading gr = grading_from_diagram(g, wd);
  CHECK(bracket(g, *v.n, *v.z).is_zero());
  CHECK(gr.in_n(*v.n));
  CHECK_FALSE(gr.in_n_perp(*v.z));
  CHECK(v.bracket_vanishes);
  CHECK(v.n_in_n);
  CHECK(v.z_outside_n_perp);
}

}  // namespace

TEST_CASE("F4 obstruction roots") {
  const RootSystem rs = build_root_system({Family::F, 4});
  const F4Roots r = f4_obstruction_roots();
  for (const Root* x : {&r.alpha, &r.beta, &r.gamma}) CHECK(rs.is_root(*x));
  // [X_a, X_-c] vanishes because a - c is neither a root nor zero
  CHECK_FALSE(rs.is_root(r.alpha - r.gamma));
  CHECK_FALSE(rs.is_root(r.beta - r.gamma));
  const ChevalleyAlgebra g = build_algebra(rs);
  CHECK(bracket(g, g.X(r.alpha) + g.X(r.beta), g.X(Root(-r.gamma))).is_zero());
}

TEST_CASE("F4 exclusion fires exactly when l1 + l2 + l3 >= 2") {
  const ChevalleyAlgebra g = build_algebra({Family::F, 4});
  for (const auto& labels : all_labels(4)) {
    const WeightedDiagram wd{g.type(), labels};
    CAPTURE(wd.str());
    const ExclusionVerdict v = f4_exclusion(g, wd);
    CHECK(v.s == labels[0] + labels[1] + labels[2]);
    if (v.s >= 2) {
      CHECK(v.status == ExclusionStatus::Excluded);
      check_excluded(g, wd, v);
    } else {
      CHECK(v.status == ExclusionStatus::NotExcluded);
    }
  }
}

TEST_CASE("E6 sweep") {
  const ChevalleyAlgebra g = build_algebra({Family::E, 6});
  int excluded = 0;
  for (const auto& labels : all_labels(6)) {
    const WeightedDiagram wd{g.type(), labels};
    CAPTURE(wd.str());
    const ExclusionVerdict v = etype_exclusion(g, wd);
    if (v.s - v.m >= 2) {
      CHECK(v.status == ExclusionStatus::Excluded);
      check_excluded(g, wd, v);
      ++excluded;
    } else if (v.status == ExclusionStatus::InG2Case) {
      CHECK(v.s == 2);
      CHECK(v.n_in_g2);
    } else {
      CHECK(v.status == ExclusionStatus::NotExcluded);
    }
  }
  CHECK(excluded > 0);
}

TEST_CASE("minimal diagrams are never excluded") {
  for (const char* type : {"E6", "E7", "E8", "F4"}) {
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    CHECK(exclusion(g, minimal_orbit_diagram(g)).status != ExclusionStatus::Excluded);
  }
}

TEST_CASE("E8 surviving diagram") {
  const RootSystem e8 = build_root_system({Family::E, 8});
  const OrthogonalPairCheck c = e8_surviving_diagram_check(e8);
  CHECK(c.ok());
  CHECK(std::vector<int>(c.lambda.data(), c.lambda.data() + 8) == std::vector<int>{1, 3, 3, 5, 4, 3, 2, 1});
  CHECK(std::vector<int>(c.mu.data(), c.mu.data() + 8) == std::vector<int>{2, 2, 3, 4, 3, 2, 1, 0});
  CHECK(e8.inner(c.lambda, c.mu) == Rational(0));
  const ChevalleyAlgebra g = build_algebra(e8);
  const ExclusionVerdict v = etype_exclusion(g, {e8.type(), {1, 0, 0, 0, 0, 0, 0, 1}});
  CHECK(v.s == 2);
  CHECK(v.m == 1);
  CHECK(v.status != ExclusionStatus::Excluded);
}

TEST_CASE("exclusion rejects other families") {
  const ChevalleyAlgebra g = build_algebra({Family::B, 3});
  CHECK_THROWS_AS(exclusion(g, WeightedDiagram::zero(g.type())), std::invalid_argument);
  CHECK(to_string(ExclusionStatus::InG2Case) != to_string(ExclusionStatus::Excluded));
}
