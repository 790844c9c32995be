#include "lieorb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace lieorb {

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank(Family f) {
  switch (f) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return 1 << 20;
  }
}

void bond(Eigen::MatrixXi& a, int i, int j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

CartanType::CartanType(Family f, int r) : family(f), rank(r) {
  if (r < min_rank(f) || r > max_rank(f))
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(r) + " for type " +
                                family_letter(f));
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("bad Cartan family '" + std::string(text) + "'");
  auto digits = text.substr(text[1] == '_' ? 2 : 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
    throw std::invalid_argument("bad Cartan rank in '" + std::string(text) + "'");
  return CartanType(static_cast<Family>(c - 'A'), std::stoi(std::string(digits)));
}

std::string CartanType::name() const { return family_letter(family) + std::to_string(rank); }

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Eigen::Index i = 0; i < r.size(); ++i) h = (h ^ static_cast<std::size_t>(r(i) + 64)) * 1099511628211ull;
  return h;
}

Eigen::MatrixXi cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 1);
      break;
    case Family::E:
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case Family::F:
      bond(a, 0, 1);
      bond(a, 1, 2);
      bond(a, 2, 3);
      a(2, 1) = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      bond(a, 0, 1);
      a(0, 1) = -3;  // alpha_1 short
      break;
  }
  return a;
}

namespace {

RatMatrix symmetrize(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::optional<Rational>> d(n);
  d[0] = Rational(1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || d[j]) continue;
      // a_ij d_i = a_ji d_j
      d[j] = Rational(a(i, j)) * *d[i] / Rational(a(j, i));
      queue.push_back(j);
    }
  }
  Rational longest = 0;
  for (const auto& x : d) longest = std::max(longest, *x);
  RatMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = Rational(a(i, j)) * (*d[i] * 2 / longest) / 2;
  return s;
}

RatMatrix epsilon_f4() {
  const Rational h(1, 2);
  RatMatrix e = RatMatrix::Zero(4, 4);
  e(0, 1) = 1; e(0, 2) = -1;                              // eps2 - eps3
  e(1, 2) = 1; e(1, 3) = -1;                              // eps3 - eps4
  e(2, 3) = 1;                                            // eps4
  e(3, 0) = h; e(3, 1) = -h; e(3, 2) = -h; e(3, 3) = -h;  // (eps1-eps2-eps3-eps4)/2
  return e;
}

RatMatrix epsilon_e8() {
  const Rational h(1, 2);
  RatMatrix e = RatMatrix::Zero(8, 8);
  for (int k = 0; k < 8; ++k) e(0, k) = -h;
  e(0, 0) = h;
  e(0, 7) = h;             // (eps1+eps8 - eps2 - ... - eps7)/2
  e(1, 0) = 1; e(1, 1) = 1;  // eps1 + eps2
  e(2, 1) = 1; e(2, 0) = -1; // eps2 - eps1
  for (int k = 3; k < 8; ++k) {
    e(k, k - 1) = 1;        // eps_k - eps_{k-1}
    e(k, k - 2) = -1;
  }
  return e;
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t), cartan_(lieorb::cartan_matrix(t)), sym_(symmetrize(cartan_)) {
  const int n = t.rank;
  // positive roots level by level; a root beta + alpha_i exists iff q > 0 in
  // the alpha_i-string p..q through beta (q = p - <beta, alpha_i^vee>)
  std::vector<Root> positive;
  std::unordered_map<Root, int, RootHash> seen;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) level.push_back(Root::Unit(n, i));
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), [](const Root& a, const Root& b) {
      return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
    for (const auto& r : level) {
      seen.emplace(r, static_cast<int>(positive.size()));
      positive.push_back(r);
    }
    std::vector<Root> next;
    std::unordered_map<Root, int, RootHash> next_seen;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          down(i) -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        const int q = p - pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        up(i) += 1;
        if (next_seen.emplace(up, 0).second) next.push_back(up);
      }
    }
    level = std::move(next);
  }
  num_positive_ = static_cast<int>(positive.size());
  roots_ = positive;
  for (const auto& r : positive) roots_.push_back(-r);
  for (int i = 0; i < size(); ++i) index_.emplace(roots_[i], i);

  highest_ = num_positive_ - 1;  // unique root of maximal height
  for (int i = 0; i < num_positive_; ++i)
    if (((roots_[highest_] - roots_[i]).array() < 0).any())
      throw std::logic_error("highest root is not coordinatewise maximal");

  if (t.family == Family::F) epsilon_ = epsilon_f4();
  if (t.family == Family::E && t.rank == 8) epsilon_ = epsilon_e8();
  if (epsilon_) {
    const RatMatrix gram = *epsilon_ * epsilon_->transpose();
    if (gram != sym_) throw std::logic_error("epsilon realization disagrees with the Cartan form");
  }
}

std::optional<int> RootSystem::index_of(const Root& coords) const {
  if (coords.size() != rank()) return std::nullopt;
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::simple_index(int k) const {
  return *index_of(Root::Unit(rank(), k));
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b(j) != 0) s += Rational(a(i) * b(j)) * sym_(i, j);
  }
  return s;
}

int RootSystem::pairing(const Root& r, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += cartan_(i, j) * r(j);
  return s;
}

Root RootSystem::coroot_coords(const Root& r) const {
  const Rational len = norm2(r);
  Root c(rank());
  for (int i = 0; i < rank(); ++i) {
    const Rational v = Rational(r(i)) * sym_(i, i) / len;
    if (!v.is_integer()) throw std::logic_error("non-integral coroot coordinate");
    c(i) = static_cast<int>(v.num());
  }
  return c;
}

Root RootSystem::reflect(const Root& r, int i) const {
  Root out = r;
  out(i) -= pairing(r, i);
  return out;
}

const RatMatrix& RootSystem::epsilon_basis() const {
  if (!epsilon_) throw std::logic_error("no epsilon realization for " + type_.name());
  return *epsilon_;
}

RatVector RootSystem::to_epsilon(const Root& r) const {
  const RatMatrix& e = epsilon_basis();
  RatVector v = RatVector::Zero(e.cols());
  for (int i = 0; i < rank(); ++i)
    if (r(i) != 0) v += Rational(r(i)) * e.row(i).transpose();
  return v;
}

std::optional<Root> RootSystem::from_epsilon(const RatVector& v) const {
  const RatMatrix& e = epsilon_basis();
  auto c = linalg::solve(RatMatrix(e.transpose()), v);
  if (!c) return std::nullopt;
  Root out(rank());
  for (int i = 0; i < rank(); ++i) {
    if (!(*c)(i).is_integer()) return std::nullopt;
    out(i) = static_cast<int>((*c)(i).num());
  }
  return out;
}

RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

Root highest_root(const RootSystem& rs) { return rs.highest_root(); }

ESigmaFacts e_type_sigma_facts(const RootSystem& rs) {
  if (rs.type().family != Family::E)
    throw std::invalid_argument("sigma facts are defined for type E only, got " + rs.type().name());
  const int n = rs.rank();
  ESigmaFacts f;
  f.sigma = Root::Ones(n);
  f.ends = {1, 2, n};
  f.sigma_is_root = rs.is_root(f.sigma);
  for (int k = 0; k < 3; ++k) {
    f.sigma_minus_end[k] = f.sigma - Root::Unit(n, f.ends[k] - 1);
    f.minus_end_is_root[k] = rs.is_root(f.sigma_minus_end[k]);
  }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int k = 0; k < 3; ++k)
    f.orthogonal[k] =
        rs.inner(f.sigma_minus_end[pairs[k].first], f.sigma_minus_end[pairs[k].second]).is_zero();
  return f;
}

}  // namespace lieorb
