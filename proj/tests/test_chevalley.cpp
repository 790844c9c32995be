#include <doctest.h>

#include <random>

#include "lieorb/chevalley.hpp"
#include "lieorb/random.hpp"

using namespace lieorb;

namespace {

LieElement random_element(const ChevalleyAlgebra& g, std::mt19937_64& rng, int terms = 4) {
  LieElement x = g.zero();
  while (x.is_zero())
    for (int t = 0; t < terms; ++t) x.add(draw_int(rng, 0, g.dim() - 1), draw_nonzero(rng, 3));
  return x;
}

struct DualCoxeter {
  const char* type;
  int h;
};

// Dual Coxeter numbers from the standard tables.
constexpr DualCoxeter kDualCoxeter[] = {{"A1", 2}, {"A2", 3}, {"A4", 5}, {"B3", 5}, {"B4", 7}, {"C3", 4},
                                        {"C4", 5}, {"D4", 6}, {"D5", 8}, {"G2", 4}, {"F4", 9}, {"E6", 12},
                                        {"E7", 18}, {"E8", 30}};

}  // namespace

TEST_CASE("Jacobi identity on all basis triples") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    int bad = 0;
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        for (int k = 0; k < g.dim(); ++k) {
          const auto a = g.basis(i), b = g.basis(j), c = g.basis(k);
          const LieElement s = bracket(g, a, bracket(g, b, c)) + bracket(g, b, bracket(g, c, a)) +
                               bracket(g, c, bracket(g, a, b));
          bad += !s.is_zero();
        }
    CHECK(bad == 0);
  }
}

TEST_CASE("Jacobi identity on random elements of larger algebras") {
  std::mt19937_64 rng(7);
  for (const char* name : {"B3", "C3", "D4", "F4", "E6"}) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
      const LieElement s = bracket(g, a, bracket(g, b, c)) + bracket(g, b, bracket(g, c, a)) +
                           bracket(g, c, bracket(g, a, b));
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("structure constants are +-(p+1)") {
  for (const char* name : {"B3", "C3", "G2", "F4"}) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    const RootSystem& rs = g.roots();
    for (int r = 0; r < rs.size(); ++r)
      for (int s = 0; s < rs.size(); ++s) {
        if (!rs.is_root(rs.root(r) + rs.root(s))) {
          CHECK(g.root_sum(r, s) == -1);
          continue;
        }
        int p = 0;
        while (rs.is_root(rs.root(s) - (p + 1) * rs.root(r))) ++p;
        CHECK(std::abs(g.structure_constant(r, s)) == p + 1);
        CHECK(g.structure_constant(r, s) == -g.structure_constant(s, r));
      }
  }
}

TEST_CASE("Cartan elements act by root values") {
  const ChevalleyAlgebra g = build_algebra({Family::F, 4});
  const RootSystem& rs = g.roots();
  for (int i = 0; i < g.rank(); ++i)
    for (int r = 0; r < rs.size(); ++r)
      CHECK(bracket(g, g.H(i), g.X(r)) == Rational(rs.pairing(rs.root(r), i)) * g.X(r));
}

TEST_CASE("Killing form of sl2 and the dual Coxeter number") {
  const ChevalleyAlgebra sl2 = build_algebra({Family::A, 1});
  CHECK(killing(sl2, sl2.H(0), sl2.H(0)) == Rational(8));
  for (const auto& [name, h] : kDualCoxeter) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    const LieElement ht = g.coroot(g.roots().highest_root_index());
    CHECK(killing(g, ht, ht) == Rational(4 * h));
  }
}

TEST_CASE("Killing form is invariant and nondegenerate") {
  std::mt19937_64 rng(11);
  for (const char* name : {"A3", "B2", "G2", "D4"}) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    for (int t = 0; t < 25; ++t) {
      const auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
      CHECK(killing(g, bracket(g, x, y), z) == killing(g, x, bracket(g, y, z)));
    }
    std::vector<int> all(g.dim());
    for (int k = 0; k < g.dim(); ++k) all[k] = k;
    CHECK(linalg::rank(killing_gram(g, all, all)) == g.dim());
  }
}

TEST_CASE("minimal orbit dimension is 2h - 2") {
  for (const auto& [name, h] : kDualCoxeter) {
    CAPTURE(name);
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    const LieElement x = g.X(g.roots().highest_root_index());
    CHECK(orbit_dimension(g, x) == 2 * h - 2);
    CHECK(projective_orbit_dimension(g, x) == 2 * h - 3);
  }
  const ChevalleyAlgebra a2 = build_algebra({Family::A, 2});
  CHECK(centralizer(a2, a2.X(a2.roots().highest_root_index())).cols() == 4);
}

TEST_CASE("ad of the highest root vector") {
  for (const char* name : {"A2", "G2", "E6"}) {
    const ChevalleyAlgebra g = build_algebra(CartanType::parse(name));
    const LieElement x = g.X(g.roots().highest_root_index());
    CHECK(ad_power_vanishes(g, x, 3));
    CHECK_FALSE(ad_power_vanishes(g, x, 2));
    CHECK(is_ad_nilpotent(g, x));
    CHECK_FALSE(is_ad_nilpotent(g, g.H(0)));
  }
}

TEST_CASE("exp(ad x) is an automorphism") {
  std::mt19937_64 rng(3);
  const ChevalleyAlgebra g = build_algebra({Family::B, 3});
  for (int t = 0; t < 20; ++t) {
    const LieElement x = Rational(draw_nonzero(rng, 2)) * g.X(draw_int(rng, 0, g.num_roots() - 1));
    const auto a = random_element(g, rng), b = random_element(g, rng);
    CHECK(exp_ad(g, x, bracket(g, a, b)) == bracket(g, exp_ad(g, x, a), exp_ad(g, x, b)));
    CHECK(killing(g, exp_ad(g, x, a), exp_ad(g, x, b)) == killing(g, a, b));
  }
  CHECK_THROWS_AS(exp_ad(g, g.H(0), g.X(0)), std::invalid_argument);
}

TEST_CASE("coroots satisfy [X_r, X_-r] = H_r and r(H_r) = 2") {
  const ChevalleyAlgebra g = build_algebra({Family::G, 2});
  const RootSystem& rs = g.roots();
  for (int r = 0; r < rs.num_positive(); ++r) {
    const LieElement h = g.coroot(r);
    CHECK(bracket(g, g.X(r), g.X(rs.negative(r))) == h);
    CHECK(bracket(g, h, g.X(r)) == Rational(2) * g.X(r));
  }
}

TEST_CASE("elements of different algebras do not mix") {
  const ChevalleyAlgebra a = build_algebra({Family::A, 2});
  const ChevalleyAlgebra b = build_algebra({Family::A, 2});
  CHECK_THROWS(bracket(a, a.X(0), b.X(1)));
}
