#include "lieorb/chevalley.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lieorb {

// ---------------------------------------------------------------- LieElement

Rational LieElement::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add(int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatVector LieElement::dense(int dim) const {
  RatVector v = RatVector::Zero(dim);
  for (const auto& [k, c] : terms_) v(k) = c;
  return v;
}

void LieElement::check_same(const LieElement& o) const {
  if (algebra_ != o.algebra_) throw std::invalid_argument("Lie elements from different algebras");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------- ChevalleyAlgebra

namespace {
std::atomic<std::uint64_t> next_algebra_id{1};
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)), id_(next_algebra_id++) {
  const int nr = rs_.size();
  sum_.assign(static_cast<std::size_t>(nr) * nr, -1);
  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < nr; ++s)
      if (auto t = rs_.index_of(rs_.root(r) + rs_.root(s))) sum_[r * nr + s] = *t;
  coroots_.reserve(nr);
  for (int r = 0; r < nr; ++r) coroots_.push_back(rs_.coroot_coords(rs_.root(r)));
  build_structure_constants();

  ad_.reserve(dim());
  for (int k = 0; k < dim(); ++k) {
    std::vector<Eigen::Triplet<Rational>> trips;
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, c] : basis_bracket(k, j)) trips.emplace_back(i, j, Rational(c));
    RatSparse m(dim(), dim());
    m.setFromTriplets(trips.begin(), trips.end());
    ad_.push_back(std::move(m));
  }
  verify_sample();
}

void ChevalleyAlgebra::build_structure_constants() {
  const int nr = rs_.size();
  const int np = rs_.num_positive();
  n_.assign(static_cast<std::size_t>(nr) * nr, 0);
  auto at = [&](int r, int s) -> int& { return n_[r * nr + s]; };

  // string length p: largest p with s - p r a root
  auto string_p = [&](int r, int s) {
    int p = 0;
    Root x = rs_.root(s);
    while (true) {
      x -= rs_.root(r);
      if (!rs_.is_root(x)) return p;
      ++p;
    }
  };

  // N_{r,s} for arbitrary roots, using only positive pairs already filled in
  std::function<int(int, int)> value = [&](int r, int s) -> int {
    const int u = root_sum(r, s);
    if (u < 0) return 0;
    const bool pr = rs_.is_positive(r), ps = rs_.is_positive(s);
    if (pr && ps) return at(r, s);
    if (!pr && !ps) return -at(rs_.negative(r), rs_.negative(s));
    // r + s + t = 0:  N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
    const int t = rs_.negative(u);
    const Rational tt = rs_.norm2(rs_.root(t));
    Rational v;
    if (rs_.is_positive(s) == rs_.is_positive(t)) {
      v = tt / rs_.norm2(rs_.root(r)) * Rational(value(s, t));
    } else {
      v = tt / rs_.norm2(rs_.root(s)) * Rational(value(t, r));
    }
    if (!v.is_integer()) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(v.num());
  };

  for (int xi = 0; xi < np; ++xi) {
    if (rs_.height(xi) == 1) continue;
    int a = -1, b = -1;
    for (int r = 0; r < np && a < 0; ++r) {
      const auto diff = rs_.index_of(rs_.root(xi) - rs_.root(r));
      if (diff && rs_.is_positive(*diff)) {
        a = r;
        b = *diff;
      }
    }
    const int nab = string_p(a, b) + 1;
    at(a, b) = nab;
    at(b, a) = -nab;
    const Rational xixi = rs_.norm2(rs_.root(xi));
    const int na = rs_.negative(a), nb = rs_.negative(b);
    for (int r = 0; r < np; ++r) {
      const int s = root_sum(rs_.negative(r), xi);
      if (s < 0 || !rs_.is_positive(s) || s <= r) continue;
      if (r == a || r == b) continue;
      // four-term relation applied to (r, s, -a, -b)
      Rational acc = 0;
      const int s_minus_a = root_sum(s, na);
      if (s_minus_a >= 0)
        acc += Rational(value(s, na) * value(r, nb)) / rs_.norm2(rs_.root(s_minus_a));
      const int r_minus_a = root_sum(r, na);
      if (r_minus_a >= 0)
        acc += Rational(value(na, r) * value(s, nb)) / rs_.norm2(rs_.root(r_minus_a));
      const Rational v = xixi / Rational(nab) * acc;
      if (!v.is_integer()) throw std::logic_error("non-integral structure constant");
      at(r, s) = static_cast<int>(v.num());
      at(s, r) = -at(r, s);
    }
  }

  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < nr; ++s) {
      if (root_sum(r, s) < 0) continue;
      if (!(rs_.is_positive(r) && rs_.is_positive(s))) at(r, s) = value(r, s);
      const int expect = string_p(r, s) + 1;
      if (std::abs(at(r, s)) != expect) {
        std::ostringstream msg;
        msg << type().name() << ": |N(" << r << "," << s << ")| = " << at(r, s) << ", expected " << expect;
        throw std::logic_error(msg.str());
      }
    }
}

std::vector<std::pair<int, int>> ChevalleyAlgebra::basis_bracket(int i, int j) const {
  const int nr = rs_.size();
  std::vector<std::pair<int, int>> out;
  const bool hi = i >= nr, hj = j >= nr;
  if (hi && hj) return out;
  if (hi) {
    const int c = rs_.pairing(rs_.root(j), i - nr);
    if (c != 0) out.emplace_back(j, c);
    return out;
  }
  if (hj) {
    const int c = rs_.pairing(rs_.root(i), j - nr);
    if (c != 0) out.emplace_back(i, -c);
    return out;
  }
  if (rs_.negative(i) == j) {
    const Root& h = coroots_[i];
    for (int k = 0; k < rs_.rank(); ++k)
      if (h(k) != 0) out.emplace_back(nr + k, h(k));
    return out;
  }
  const int t = root_sum(i, j);
  if (t >= 0) out.emplace_back(t, structure_constant(i, j));
  return out;
}

LieElement ChevalleyAlgebra::basis(int k) const {
  if (k < 0 || k >= dim()) throw std::out_of_range("basis index out of range");
  LieElement e(id_);
  e.add(k, 1);
  return e;
}

LieElement ChevalleyAlgebra::X(const Root& coords) const {
  auto i = rs_.index_of(coords);
  if (!i) throw std::invalid_argument("not a root of " + type().name());
  return basis(*i);
}

LieElement ChevalleyAlgebra::coroot(int r) const {
  LieElement e(id_);
  for (int k = 0; k < rank(); ++k) e.add(rs_.size() + k, coroots_[r](k));
  return e;
}

LieElement ChevalleyAlgebra::from_dense(const RatVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("dense vector has wrong dimension");
  LieElement e(id_);
  for (int k = 0; k < dim(); ++k) e.add(k, v(k));
  return e;
}

std::string ChevalleyAlgebra::basis_label(int k) const {
  std::ostringstream os;
  if (k >= rs_.size()) {
    os << "H" << (k - rs_.size() + 1);
    return os.str();
  }
  os << "X(";
  const Root& r = rs_.root(k);
  for (int i = 0; i < r.size(); ++i) os << (i ? "," : "") << r(i);
  os << ")";
  return os.str();
}

void ChevalleyAlgebra::check(const LieElement& a) const {
  if (a.algebra() != id_)
    throw std::invalid_argument("element does not belong to the " + type().name() + " algebra");
}

void ChevalleyAlgebra::verify_sample() const {
  // deterministic sample of basis triples; exhaustive for small algebras
  const int d = dim();
  const long total = static_cast<long>(d) * d * d;
  const long count = std::min<long>(total, 400);
  for (long t = 0; t < count; ++t) {
    const long idx = total <= 400 ? t : (t * 7919L + 104729L * (t % 13)) % total;
    const int i = static_cast<int>(idx / (static_cast<long>(d) * d));
    const int j = static_cast<int>((idx / d) % d);
    const int k = static_cast<int>(idx % d);
    const auto x = basis(i), y = basis(j), z = basis(k);
    const LieElement jac = bracket(*this, x, bracket(*this, y, z)) + bracket(*this, y, bracket(*this, z, x)) +
                           bracket(*this, z, bracket(*this, x, y));
    if (!jac.is_zero()) {
      std::ostringstream msg;
      msg << type().name() << ": Jacobi identity fails on (" << basis_label(i) << ", " << basis_label(j)
          << ", " << basis_label(k) << ")";
      throw std::logic_error(msg.str());
    }
  }
}

ChevalleyAlgebra build_algebra(const RootSystem& rs) { return ChevalleyAlgebra(rs); }
ChevalleyAlgebra build_algebra(const CartanType& t) { return ChevalleyAlgebra(RootSystem(t)); }

// ------------------------------------------------------------- free functions

LieElement bracket(const ChevalleyAlgebra& g, const LieElement& a, const LieElement& b) {
  g.check(a);
  g.check(b);
  LieElement out = g.zero();
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      const Rational cc = ci * cj;
      for (const auto& [k, n] : g.basis_bracket(i, j)) out.add(k, cc * Rational(n));
    }
  return out;
}

RatSparse ad_matrix(const ChevalleyAlgebra& g, const LieElement& a) {
  g.check(a);
  RatSparse m(g.dim(), g.dim());
  for (const auto& [k, c] : a.terms()) m += c * g.ad_basis(k);
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return !v.is_zero(); });
  return m;
}

Rational trace_product(const RatSparse& a, const RatSparse& b) {
  Rational t = 0;
  for (Eigen::Index i = 0; i < a.outerSize(); ++i)
    for (RatSparse::InnerIterator it(a, i); it; ++it) {
      const Rational bji = b.coeff(it.col(), i);
      if (!bji.is_zero()) t += it.value() * bji;
    }
  return t;
}

Rational killing(const ChevalleyAlgebra& g, const LieElement& a, const LieElement& b) {
  g.check(a);
  g.check(b);
  Rational t = 0;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      // only weight-zero products have a trace
      if (!g.is_cartan_index(i) || !g.is_cartan_index(j)) {
        if (g.is_cartan_index(i) != g.is_cartan_index(j)) continue;
        if (g.roots().negative(i) != j) continue;
      }
      t += ci * cj * trace_product(g.ad_basis(i), g.ad_basis(j));
    }
  return t;
}

RatMatrix killing_gram(const ChevalleyAlgebra& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  RatMatrix k(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      k(i, j) = killing(g, g.basis(rows[i]), g.basis(cols[j]));
  return k;
}

RatMatrix centralizer(const ChevalleyAlgebra& g, const LieElement& a) {
  return linalg::kernel(ad_matrix(g, a));
}

int orbit_dimension(const ChevalleyAlgebra& g, const LieElement& a) {
  if (a.is_zero()) throw std::invalid_argument("orbit_dimension: zero element");
  return linalg::rank(ad_matrix(g, a));
}

int projective_orbit_dimension(const ChevalleyAlgebra& g, const LieElement& a) {
  return orbit_dimension(g, a) - 1;
}

LieElement exp_ad(const ChevalleyAlgebra& g, const LieElement& x, const LieElement& y) {
  if (!is_ad_nilpotent(g, x)) throw std::invalid_argument("exp_ad: x is not ad-nilpotent");
  LieElement sum = y, term = y;
  for (int k = 1; !term.is_zero(); ++k) {
    term = Rational(1, k) * bracket(g, x, term);
    sum += term;
  }
  return sum;
}

bool is_ad_nilpotent(const ChevalleyAlgebra& g, const LieElement& a) {
  const RatSparse ad = ad_matrix(g, a);
  RatSparse p = ad;
  int prev = linalg::rank(p);
  while (prev > 0) {
    p = linalg::sparse_product(p, ad);
    const int r = linalg::rank(p);
    if (r == prev) return false;
    prev = r;
  }
  return true;
}

bool ad_power_vanishes(const ChevalleyAlgebra& g, const LieElement& a, int k) {
  const RatSparse ad = ad_matrix(g, a);
  RatSparse p = ad;
  for (int i = 1; i < k && p.nonZeros() > 0; ++i) p = linalg::sparse_product(p, ad);
  return p.nonZeros() == 0;
}

}  // namespace lieorb
