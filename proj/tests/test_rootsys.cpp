#include <doctest.h>

#include <set>
#include <vector>

#include "lieorb/rootsys.hpp"

using namespace lieorb;

namespace {

using Vec = std::vector<Rational>;

// Classical roots written in the orthonormal e-basis, independent of the
// closure algorithm used by the library.
std::vector<Vec> classical_eps_roots(Family f, int l) {
  const int n = f == Family::A ? l + 1 : l;
  std::vector<Vec> out;
  auto unit = [&](int i, int s) {
    Vec v(n, Rational(0));
    v[i] = Rational(s);
    return v;
  };
  auto add = [](Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back(add(unit(i, 1), unit(j, -1)));
      if (f != Family::A && i < j) {
        out.push_back(add(unit(i, 1), unit(j, 1)));
        out.push_back(add(unit(i, -1), unit(j, -1)));
      }
    }
  for (int i = 0; i < n; ++i) {
    if (f == Family::B) {
      out.push_back(unit(i, 1));
      out.push_back(unit(i, -1));
    }
    if (f == Family::C) {
      out.push_back(unit(i, 2));
      out.push_back(unit(i, -2));
    }
  }
  return out;
}

// Bourbaki simple roots in the same e-basis.
std::vector<Vec> classical_simple(Family f, int l) {
  const int n = f == Family::A ? l + 1 : l;
  std::vector<Vec> s;
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    v[i + 1] = -1;
    s.push_back(v);
  }
  if (f == Family::A) return s;
  Vec last(n, Rational(0));
  if (f == Family::B) last[n - 1] = 1;
  if (f == Family::C) last[n - 1] = 2;
  if (f == Family::D) last[n - 2] = last[n - 1] = 1;
  s.push_back(last);
  return s;
}

std::set<std::vector<int>> as_set(const RootSystem& rs) {
  std::set<std::vector<int>> s;
  for (const Root& r : rs.roots()) s.insert({r.data(), r.data() + r.size()});
  return s;
}

// Simple-root coordinates of an e-vector, by expanding in the simple roots
// (triangular structure: solve greedily from the first coordinate).
std::vector<int> simple_coords(const std::vector<Vec>& simple, Vec v) {
  const int l = static_cast<int>(simple.size());
  RatMatrix m(v.size(), l);
  RatVector b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    b(i) = v[i];
    for (int j = 0; j < l; ++j) m(i, j) = simple[j][i];
  }
  const auto x = linalg::solve(m, b);
  REQUIRE(x);
  std::vector<int> out(l);
  for (int j = 0; j < l; ++j) {
    REQUIRE((*x)(j).is_integer());
    out[j] = static_cast<int>((*x)(j).num());
  }
  return out;
}

}  // namespace

TEST_CASE("root counts") {
  const std::pair<const char*, int> cases[] = {{"A1", 2},  {"A4", 20},  {"B2", 8},   {"B5", 50},  {"C3", 18},
                                               {"D4", 24}, {"D6", 60},  {"G2", 12},  {"F4", 48},  {"E6", 72},
                                               {"E7", 126}, {"E8", 240}};
  for (auto [name, count] : cases) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    CHECK(rs.size() == count);
    CHECK(rs.num_positive() * 2 == count);
  }
}

TEST_CASE("classical roots agree with the e-basis description") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int l = 2; l <= 6; ++l) {
      if (f == Family::D && l < 3) continue;
      const RootSystem rs = build_root_system({f, l});
      CAPTURE(rs.type().name());
      const auto simple = classical_simple(f, l);
      std::set<std::vector<int>> expected;
      for (const Vec& v : classical_eps_roots(f, l)) expected.insert(simple_coords(simple, v));
      CHECK(expected == as_set(rs));
    }
}

TEST_CASE("F4 and E8 roots from the e-basis") {
  SUBCASE("F4") {
    const RootSystem rs = build_root_system({Family::F, 4});
    int seen = 0;
    for (int i = 0; i < 4; ++i)
      for (int s : {1, -1}) {
        RatVector v = RatVector::Zero(4);
        v(i) = s;
        CHECK(rs.from_epsilon(v));
        ++seen;
        for (int j = i + 1; j < 4; ++j)
          for (int t : {1, -1}) {
            RatVector w = v;
            w(j) = t;
            CHECK(rs.from_epsilon(w));
            ++seen;
          }
      }
    for (int mask = 0; mask < 16; ++mask) {
      RatVector v(4);
      for (int i = 0; i < 4; ++i) v(i) = Rational((mask >> i) & 1 ? -1 : 1, 2);
      CHECK(rs.from_epsilon(v));
      ++seen;
    }
    CHECK(seen == 48);
  }
  SUBCASE("E8") {
    const RootSystem rs = build_root_system({Family::E, 8});
    std::set<std::vector<int>> found;
    auto record = [&](const RatVector& v) {
      const auto r = rs.from_epsilon(v);
      REQUIRE(r);
      found.insert({r->data(), r->data() + r->size()});
    };
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int s : {1, -1})
          for (int t : {1, -1}) {
            RatVector v = RatVector::Zero(8);
            v(i) = s;
            v(j) = t;
            record(v);
          }
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      RatVector v(8);
      for (int i = 0; i < 8; ++i) v(i) = Rational((mask >> i) & 1 ? -1 : 1, 2);
      record(v);
    }
    CHECK(found.size() == 240);
    CHECK(found == as_set(rs));
  }
}

TEST_CASE("highest roots") {
  const std::pair<const char*, std::vector<int>> cases[] = {
      {"A3", {1, 1, 1}},          {"B3", {1, 2, 2}},          {"C3", {2, 2, 1}},
      {"D5", {1, 2, 2, 1, 1}},    {"G2", {3, 2}},             {"F4", {2, 3, 4, 2}},
      {"E6", {1, 2, 2, 3, 2, 1}}, {"E7", {2, 2, 3, 4, 3, 2, 1}}, {"E8", {2, 3, 4, 6, 5, 4, 3, 2}}};
  for (const auto& [name, coeffs] : cases) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    const Root& h = rs.highest_root();
    CHECK(std::vector<int>(h.data(), h.data() + h.size()) == coeffs);
    CHECK(rs.is_long(h));
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.pairing(h, i) >= 0);
  }
}

TEST_CASE("Cartan matrix against the symmetric form") {
  for (const char* name : {"A4", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    const auto& a = rs.cartan_matrix();
    const auto& s = rs.sym_form();
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(a(i, i) == 2);
      for (int j = 0; j < rs.rank(); ++j) {
        CHECK(Rational(a(i, j)) == Rational(2) * s(i, j) / s(i, i));
        CHECK((a(i, j) == 0) == (a(j, i) == 0));
      }
    }
  }
}

TEST_CASE("Bourbaki numbering: the last simple root is short in B3 and long in C3") {
  const RootSystem b3 = build_root_system({Family::B, 3});
  const RootSystem c3 = build_root_system({Family::C, 3});
  CHECK_FALSE(b3.is_long(b3.root(b3.simple_index(2))));
  CHECK(c3.is_long(c3.root(c3.simple_index(2))));
  CHECK(b3.norm2(b3.root(b3.simple_index(2))) == Rational(1));
}

TEST_CASE("reflections permute roots and preserve norms") {
  for (const char* name : {"B3", "G2", "F4", "E6"}) {
    const RootSystem rs = build_root_system(CartanType::parse(name));
    for (int r = 0; r < rs.size(); ++r)
      for (int i = 0; i < rs.rank(); ++i) {
        const Root s = rs.reflect(rs.root(r), i);
        CHECK(rs.is_root(s));
        CHECK(rs.norm2(s) == rs.norm2(rs.root(r)));
      }
  }
}

TEST_CASE("positives first, negatives mirrored") {
  const RootSystem rs = build_root_system({Family::F, 4});
  for (int i = 0; i < rs.size(); ++i) {
    CHECK(rs.root(rs.negative(i)) == -rs.root(i));
    CHECK(rs.is_positive(i) == (rs.height(i) > 0));
  }
}

TEST_CASE("type parsing") {
  CHECK(CartanType::parse("E8").name() == "E8");
  CHECK(CartanType::parse("b_3").name() == "B3");
  CHECK_THROWS(CartanType::parse("E9"));
  CHECK_THROWS(CartanType::parse("D2"));
  CHECK_THROWS(CartanType::parse("X3"));
  CHECK_THROWS(CartanType::parse("A"));
}

TEST_CASE("E-type sigma facts") {
  for (int l : {6, 7, 8}) {
    const ESigmaFacts f = e_type_sigma_facts(build_root_system({Family::E, l}));
    CHECK(f.sigma_is_root);
    for (int k = 0; k < 3; ++k) {
      CHECK(f.minus_end_is_root[k]);
      CHECK(f.orthogonal[k]);
    }
  }
}
