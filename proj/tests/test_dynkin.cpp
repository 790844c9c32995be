#include <doctest.h>

#include <random>
#include <set>

#include "lieorb/dynkin.hpp"
#include "lieorb/partitions.hpp"
#include "lieorb/random.hpp"

using namespace lieorb;

namespace {

WeightedDiagram diagram(const char* type, std::vector<int> labels) {
  return {CartanType::parse(type), std::move(labels)};
}

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

int degree_of(const Grading& gr, const LieElement& x) {
  REQUIRE(x.terms().size() >= 1);
  return gr.degree[x.terms().begin()->first];
}

}  // namespace

TEST_CASE("grading degrees and H") {
  const ChevalleyAlgebra g = build_algebra({Family::G, 2});
  const Grading gr = grading_from_diagram(g, diagram("G2", {1, 0}));
  for (int k = 0; k < g.dim(); ++k) {
    const LieElement b = g.basis(k);
    CHECK(bracket(g, gr.h, b) == Rational(gr.degree[k]) * b);
  }
  // positive roots (1,0),(0,1),(1,1),(2,1),(3,1),(3,2) sit in degrees 1,0,1,2,3,3
  CHECK(gr.piece_dim(3) == 2);
  CHECK(gr.piece_dim(2) == 1);
  CHECK(gr.piece_dim(1) == 2);
  CHECK(gr.piece_dim(0) == 4);
  CHECK(gr.p.size() == 9u);
  CHECK_THROWS_AS(grading_from_diagram(g, diagram("B2", {1, 0})), std::invalid_argument);
}

TEST_CASE("grading is compatible with the bracket") {
  std::mt19937_64 rng(5);
  for (const char* type : {"B3", "F4", "E6"}) {
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    for (int t = 0; t < 30; ++t) {
      std::vector<int> labels(g.rank());
      for (int& l : labels) l = draw_int(rng, 0, 2);
      const Grading gr = grading_from_diagram(g, {g.type(), labels});
      const int i = draw_int(rng, 0, g.dim() - 1), j = draw_int(rng, 0, g.dim() - 1);
      const LieElement c = bracket(g, g.basis(i), g.basis(j));
      if (!c.is_zero()) CHECK(gr.in_piece(c, gr.degree[i] + gr.degree[j]));
    }
  }
}

TEST_CASE("minimal orbit diagrams") {
  const std::pair<const char*, std::vector<int>> cases[] = {
      {"A1", {2}},          {"A4", {1, 0, 0, 1}},        {"B2", {0, 1}},
      {"B4", {0, 1, 0, 0}}, {"C3", {1, 0, 0}},           {"D5", {0, 1, 0, 0, 0}},
      {"G2", {0, 1}},       {"F4", {1, 0, 0, 0}},        {"E6", {0, 1, 0, 0, 0, 0}},
      {"E7", {1, 0, 0, 0, 0, 0, 0}}, {"E8", {0, 0, 0, 0, 0, 0, 0, 1}}};
  for (const auto& [type, labels] : cases) {
    CAPTURE(type);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    const WeightedDiagram wd = minimal_orbit_diagram(g);
    CHECK(wd.labels == labels);
    CHECK(wd.value(g.roots().highest_root()) == 2);
  }
}

TEST_CASE("every long root vector gives the minimal diagram") {
  for (const char* type : {"B3", "C3", "G2", "F4"}) {
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    const WeightedDiagram min = minimal_orbit_diagram(g);
    const auto shorts = short_root_orbit_diagram(g);
    REQUIRE(shorts);
    for (int r = 0; r < g.num_roots(); ++r) {
      const WeightedDiagram wd = diagram_of_root_vector_orbit(g, r);
      CHECK(wd == (g.roots().is_long(g.roots().root(r)) ? min : *shorts));
    }
  }
  CHECK_FALSE(short_root_orbit_diagram(build_algebra({Family::E, 6})));
}

TEST_CASE("short root orbit diagrams") {
  const std::pair<const char*, std::vector<int>> cases[] = {
      {"B3", {2, 0, 0}}, {"B4", {2, 0, 0, 0}}, {"C2", {0, 2}}, {"C3", {0, 1, 0}}, {"F4", {0, 0, 0, 1}}, {"G2", {1, 0}}};
  for (const auto& [type, labels] : cases) {
    CAPTURE(type);
    const auto wd = short_root_orbit_diagram(build_algebra(CartanType::parse(type)));
    REQUIRE(wd);
    CHECK(wd->labels == labels);
  }
  CHECK(match_short_root_pattern(diagram("B3", {2, 0, 0})) == 0);
  CHECK(match_short_root_pattern(diagram("C2", {0, 2})) == 0);
  CHECK(match_short_root_pattern(diagram("C3", {0, 1, 0})) == 1);
  CHECK(match_short_root_pattern(diagram("F4", {0, 0, 0, 1})) == 2);
  CHECK(match_short_root_pattern(diagram("B3", {0, 1, 0})) == 1);
  CHECK_FALSE(match_short_root_pattern(diagram("B3", {1, 0, 1})));
}

TEST_CASE("sl2 completion") {
  const ChevalleyAlgebra g = build_algebra({Family::G, 2});
  const Grading min = grading_from_diagram(g, diagram("G2", {0, 1}));
  const Sl2Triple t = sl2_complete(g, min, g.X(g.roots().highest_root_index()));
  CHECK(is_sl2_triple(g, t));
  CHECK(min.in_piece(t.n1, -2));

  const Grading sub = grading_from_diagram(g, diagram("G2", {0, 2}));
  const LieElement n = g.X(*g.roots().index_of(Root::Unit(2, 1)));
  CHECK_THROWS_AS(sl2_complete(g, sub, n), NoTriple);
  CHECK_THROWS_AS(sl2_complete(g, sub, g.zero()), std::invalid_argument);
  CHECK_THROWS_AS(sl2_complete(g, sub, g.H(0)), std::invalid_argument);
}

TEST_CASE("generic elements realize exactly the orbit diagrams") {
  // Classical orbit diagrams come from partitions; G2 and F4 have 5 and 16 orbits.
  for (const char* type : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(type);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    std::set<std::vector<int>> realized;
    for (const auto& labels : all_labels(g.rank())) {
      const Grading gr = grading_from_diagram(g, {g.type(), labels});
      if (labels == std::vector<int>(g.rank(), 0) || generic_element(g, gr)) realized.insert(labels);
    }
    if (g.type().is_classical()) {
      std::set<std::vector<int>> expected;
      for (const JordanOrbit& o : enumerate_orbits(g.type()).orbits) expected.insert(weighted_diagram(o).labels);
      CHECK(realized == expected);
    } else {
      CHECK(realized.size() == (g.type().family == Family::G ? 5u : 16u));
    }
  }
}

TEST_CASE("G2 and F4 orbit dimensions") {
  const std::pair<WeightedDiagram, int> cases[] = {
      {diagram("G2", {0, 1}), 6},        {diagram("G2", {1, 0}), 8},        {diagram("G2", {0, 2}), 10},
      {diagram("G2", {2, 2}), 12},       {diagram("F4", {1, 0, 0, 0}), 16}, {diagram("F4", {0, 0, 0, 1}), 22},
      {diagram("F4", {2, 2, 2, 2}), 48}, {diagram("F4", {0, 0, 0, 0}), 0}};
  for (const auto& [wd, dim] : cases) {
    CAPTURE(wd.str());
    const ChevalleyAlgebra g = build_algebra(wd.type);
    const Grading gr = grading_from_diagram(g, wd);
    const auto gen = generic_element(g, gr);
    if (dim == 0) {
      CHECK_FALSE(gen);
      continue;
    }
    REQUIRE(gen);
    CHECK(orbit_dimension(g, gen->triple.n0) == dim);
    // the orbit meets g(2) in an open subset: dim z(N) = dim g(0) + dim g(1)
    CHECK(g.dim() - dim == gr.piece_dim(0) + gr.piece_dim(1));
  }
}

TEST_CASE("nilpotency conditions agree") {
  std::mt19937_64 rng(9);
  for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    for (int t = 0; t < 10; ++t) {
      LieElement n = g.zero();
      while (n.is_zero())
        for (int k = 0; k < 3; ++k) n.add(draw_int(rng, 0, g.roots().num_positive() - 1), draw_nonzero(rng, 3));
      const NilpotencyReport nil = nilpotency_report(g, n);
      CHECK(nil.homogeneous);
      CHECK(nil.orthogonal);
      CHECK(nil.ad_nilpotent);
      REQUIRE(nil.h_witness);
      CHECK(bracket(g, *nil.h_witness, n) == n);

      LieElement h = g.zero();
      while (h.is_zero())
        for (int i = 0; i < g.rank(); ++i) h.add(g.num_roots() + i, draw_int(rng, -3, 3));
      const NilpotencyReport ss = nilpotency_report(g, h);
      CHECK_FALSE(ss.homogeneous);
      CHECK_FALSE(ss.orthogonal);
      CHECK_FALSE(ss.ad_nilpotent);

      // H + X_r with r(H) = 0 is neither semisimple nor nilpotent
      const NilpotencyReport mixed = nilpotency_report(g, g.H(0) + g.X(g.num_roots() - 1));
      CHECK(mixed.consistent());
    }
  }
  const ChevalleyAlgebra g = build_algebra({Family::A, 1});
  CHECK_THROWS_AS(nilpotency_report(g, g.zero()), std::invalid_argument);
}

TEST_CASE("key lemma on minimal diagrams and the failure fixtures") {
  for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
    CAPTURE(type);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    const Grading gr = grading_from_diagram(g, minimal_orbit_diagram(g));
    const LieElement x = g.X(g.roots().highest_root_index());
    CHECK(key_lemma_check(g, gr, x));
    CHECK(omega_kernel_dim(g, gr, x) == 0);
  }
  const std::tuple<const char*, std::vector<int>, int, std::vector<int>> fixtures[] = {
      {"B2", {2, 0}, 0, {-1, -2}}, {"G2", {0, 2}, 1, {-2, -1}}};
  for (const auto& [type, labels, simple, witness] : fixtures) {
    CAPTURE(type);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(type));
    const Grading gr = grading_from_diagram(g, {g.type(), labels});
    const LieElement n = g.X(g.roots().simple_index(simple));
    const auto w = key_lemma_witness(g, gr, n);
    REQUIRE(w);
    CHECK(bracket(g, n, *w).is_zero());
    CHECK_FALSE(gr.in_n_perp(*w));
    Root r(2);
    r << witness[0], witness[1];
    CHECK(*w == g.X(r));
    CHECK_FALSE(key_lemma_check(g, gr, n));
  }
}

TEST_CASE("omega kernel") {
  const ChevalleyAlgebra g = build_algebra({Family::G, 2});
  const Grading shorts = grading_from_diagram(g, diagram("G2", {1, 0}));
  CHECK(omega_kernel_dim(g, shorts, g.X(g.roots().highest_root_index())) == 2);
  const auto gen = generic_element(g, shorts);
  REQUIRE(gen);
  CHECK(omega_kernel_dim(g, shorts, gen->triple.n0) == 0);
  // g(-1) = 0 on even diagrams, so every N in n gives 0
  const ChevalleyAlgebra b3 = build_algebra({Family::B, 3});
  const Grading even = grading_from_diagram(b3, diagram("B3", {2, 0, 0}));
  for (int k : even.n) CHECK(omega_kernel_dim(b3, even, b3.basis(k)) == 0);
  CHECK_THROWS_AS(omega_kernel_dim(g, shorts, g.H(0)), std::invalid_argument);
}

TEST_CASE("pairing criterion") {
  const ChevalleyAlgebra g = build_algebra({Family::G, 2});
  const std::pair<std::vector<int>, bool> cases[] = {{{0, 1}, true}, {{1, 0}, true}, {{0, 2}, false}, {{2, 2}, false}};
  for (const auto& [labels, holds] : cases) {
    const Grading gr = grading_from_diagram(g, {g.type(), labels});
    const PairingVerdict v = pairing_criterion(g, gr);
    CAPTURE(gr.diagram.str());
    CHECK((v.status == PairingStatus::Holds) == holds);
    if (!holds) {
      REQUIRE(v.status == PairingStatus::FailsWithWitness);
      REQUIRE(v.witness);
      const auto& [n, q] = *v.witness;
      CHECK_FALSE(n.is_zero());
      CHECK_FALSE(q.is_zero());
      CHECK(gr.in_piece(n, 2));
      CHECK(gr.in_piece(q, -2));
      CHECK(bracket(g, n, q).is_zero());
    }
  }
  for (const char* type : {"B4", "C4", "F4", "E6"}) {
    const ChevalleyAlgebra h = build_algebra(CartanType::parse(type));
    CHECK(pairing_criterion(h, grading_from_diagram(h, minimal_orbit_diagram(h))).status == PairingStatus::Holds);
  }
  CHECK(degree_of(grading_from_diagram(g, diagram("G2", {0, 1})), g.X(g.roots().highest_root_index())) == 2);
}
