#include "lieorb/matmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace lieorb {

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t x) {
  if (x < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  const auto a = isqrt_exact(q.num());
  const auto b = isqrt_exact(q.den());
  if (!a || !b) return std::nullopt;
  return Rational(*a, *b);
}

}  // namespace

SymplecticSpace::SymplecticSpace(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("symplectic space needs n >= 1");
  form = standard_symplectic_form<Rational>(n);
}

RankOneElement mu(const SymplecticSpace& space, const RatVector& v) {
  if (v.size() != space.dim()) throw std::invalid_argument("vector has the wrong dimension");
  return {v, v * (v.transpose() * space.form)};
}

std::vector<RatVector> mu_fiber(const SymplecticSpace& space, const RatMatrix& x) {
  // x = w w^T J  <=>  w w^T = -x J
  const RatMatrix s = -(x * space.form);
  std::vector<RatVector> out;
  int pivot = -1;
  for (int i = 0; i < s.rows() && pivot < 0; ++i)
    if (!s(i, i).is_zero()) pivot = i;
  if (pivot < 0) {
    if (s.isZero(0)) out.push_back(RatVector::Zero(space.dim()));
    return out;
  }
  const auto root = rational_sqrt(s(pivot, pivot));
  if (!root) return out;
  for (const Rational& sign : {Rational(1), Rational(-1)}) {
    const Rational wp = sign * *root;
    RatVector w = s.col(pivot) / wp;
    if (w * w.transpose() == s) out.push_back(w);
  }
  return out;
}

Partition jordan_type(const RatMatrix& x) {
  const int n = static_cast<int>(x.rows());
  std::vector<int> ranks{n};
  RatMatrix power = RatMatrix::Identity(n, n);
  while (ranks.back() > 0) {
    power = power * x;
    const int r = linalg::rank(power);
    if (r == ranks.back()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    ranks.push_back(r);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  Partition blocks;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int at_least_k = ranks[k - 1] - ranks[k];
    const int at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    blocks.insert(blocks.end(), at_least_k - at_least_next, static_cast<int>(k));
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

std::vector<RatMatrix> sp_basis(const SymplecticSpace& space) {
  std::vector<RatMatrix> basis;
  const int d = space.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      RatMatrix s = RatMatrix::Zero(d, d);
      s(i, j) = 1;
      s(j, i) = 1;
      basis.push_back(space.form * s);
    }
  return basis;
}

int kk_rank_at(const SymplecticSpace& space, const RatVector& v) {
  if (v.isZero(0)) throw std::invalid_argument("kk_rank_at: zero vector");
  const RatMatrix xi = mu(space, v).matrix;
  const auto basis = sp_basis(space);
  const int m = static_cast<int>(basis.size());
  RatMatrix gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const RatMatrix br = basis[a] * basis[b] - basis[b] * basis[a];
      gram(a, b) = (xi * br).trace();
    }
  return linalg::rank(gram);
}

JordanOrbit sp_minimal_orbit(int n) {
  if (n == 1) return {CartanType{Family::A, 1}, {2}};
  return minimal_orbit(CartanType{Family::C, n});
}

RatVector fixture_vector(int n, int shift) {
  RatVector v(2 * n);
  for (int i = 0; i < n; ++i) {
    v(i) = i + 1 + shift;
    v(n + i) = -(2 * i + 1) - shift;
  }
  return v;
}

ProductCover product_cover(const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("product_cover needs at least one factor");
  ProductCover pc;
  pc.ns = ns;
  std::vector<std::vector<RatVector>> factor_fibers;
  std::vector<RatVector> parts;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const SymplecticSpace space(ns[i]);
    const RatVector v = fixture_vector(ns[i], static_cast<int>(i));
    parts.push_back(v);
    pc.ambient_n += ns[i];
    auto f = mu_fiber(space, mu(space, v).matrix);
    if (f.size() != 2) throw std::logic_error("fiber of mu over a nonzero point must have two points");
    factor_fibers.push_back(std::move(f));
  }
  auto concat = [&](const std::vector<RatVector>& pieces) {
    RatVector out(2 * pc.ambient_n);
    Eigen::Index at = 0;
    for (const auto& p : pieces) {
      out.segment(at, p.size()) = p;
      at += p.size();
    }
    return out;
  };
  pc.sample = concat(parts);
  // all sign choices; the scalars t with t^2 = 1 identify w and -w
  const std::size_t k = ns.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<RatVector> pieces;
    for (std::size_t i = 0; i < k; ++i) pieces.push_back(factor_fibers[i][(mask >> i) & 1u]);
    const RatVector w = concat(pieces);
    const bool seen = std::any_of(pc.fiber.begin(), pc.fiber.end(),
                                  [&](const RatVector& u) { return u == w || u == RatVector(-w); });
    if (!seen) pc.fiber.push_back(w);
  }
  return pc;
}

}  // namespace lieorb
