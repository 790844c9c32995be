#include "lieorb/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lieorb {

namespace {

void require_classical(const CartanType& t) {
  if (!t.is_classical()) throw std::invalid_argument("partition calculus needs a classical type, got " + t.name());
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

int sum_squares(const Partition& p) {
  int s = 0;
  for (int x : p) s += x * x;
  return s;
}

int count_odd(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x % 2 != 0; }));
}

}  // namespace

int standard_dim(const CartanType& t) {
  require_classical(t);
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    default: return 2 * t.rank;
  }
}

bool is_valid_partition(const CartanType& t, const Partition& p) {
  if (p.empty() || std::accumulate(p.begin(), p.end(), 0) != standard_dim(t)) return false;
  if (!std::is_sorted(p.rbegin(), p.rend()) || p.back() <= 0) return false;
  const int bad_parity = t.family == Family::C ? 1 : 0;
  if (t.family == Family::A) return true;
  for (auto [part, mult] : multiplicities(p))
    if (part % 2 == bad_parity && mult % 2 != 0) return false;
  return true;
}

bool is_very_even(const CartanType& t, const Partition& p) {
  if (t.family != Family::D || !is_valid_partition(t, p)) return false;
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition dual_partition(const Partition& p) {
  Partition d(p.empty() ? 0 : p.front(), 0);
  for (int x : p)
    for (int i = 0; i < x; ++i) ++d[i];
  return d;
}

bool dominates(const Partition& b, const Partition& a) {
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

// ------------------------------------------------------------------ orbits

JordanOrbit::JordanOrbit(CartanType t, Partition p, int very_even_label)
    : type(t), partition(std::move(p)), label(very_even_label) {
  require_classical(type);
  std::sort(partition.rbegin(), partition.rend());
  if (!is_valid_partition(type, partition))
    throw std::invalid_argument("invalid partition for " + type.name() + ": " + str());
  if (is_very_even(type, partition)) {
    if (label != 1 && label != 2)
      throw std::invalid_argument("very even partition " + str() + " needs label I or II");
  } else if (label != 0) {
    throw std::invalid_argument("only very even type D partitions carry a label");
  }
}

JordanOrbit JordanOrbit::parse(CartanType t, std::string_view text) {
  std::string body(text);
  int label = 0;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    const std::string tag = body.substr(colon + 1);
    if (tag == "I" || tag == "1") label = 1;
    else if (tag == "II" || tag == "2") label = 2;
    else throw std::invalid_argument("unknown very even label '" + tag + "'");
    body.resize(colon);
  }
  body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  Partition p;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    int reps = 1;
    if (auto caret = item.find('^'); caret != std::string::npos) {
      reps = std::stoi(item.substr(caret + 1));
      item.resize(caret);
    }
    const int part = std::stoi(item);
    if (part <= 0 || reps <= 0) throw std::invalid_argument("partition parts must be positive");
    p.insert(p.end(), reps, part);
  }
  if (p.empty()) throw std::invalid_argument("empty partition");
  return {t, p, label};
}

bool JordanOrbit::is_zero() const { return partition.front() == 1; }

std::string JordanOrbit::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < partition.size(); ++i) os << (i ? "," : "") << partition[i];
  os << ')';
  if (label == 1) os << "^I";
  if (label == 2) os << "^II";
  return os.str();
}

int orbit_dim(const JordanOrbit& o) {
  const Partition f = dual_partition(o.partition);
  const int n = standard_dim(o.type);
  switch (o.type.family) {
    case Family::A: return n * n - sum_squares(f);
    case Family::C: return n * (n + 1) / 2 - (sum_squares(f) + count_odd(o.partition)) / 2;
    default: return n * (n - 1) / 2 - (sum_squares(f) - count_odd(o.partition)) / 2;
  }
}

bool closure_leq(const JordanOrbit& a, const JordanOrbit& b) {
  if (!(a.type == b.type)) throw std::invalid_argument("closure_leq: orbits of different types");
  if (!dominates(b.partition, a.partition)) return false;
  if (a.partition == b.partition) return a.label == b.label;
  if (a.label == 0 || b.label == 0 || a.label == b.label) return true;
  // differently labelled very even orbits: related only through a partition
  // that is not very even
  for (const Partition& nu : partitions_of(standard_dim(a.type)))
    if (is_valid_partition(a.type, nu) && !is_very_even(a.type, nu) && dominates(nu, a.partition) &&
        dominates(b.partition, nu))
      return true;
  return false;
}

WeightedDiagram weighted_diagram(const JordanOrbit& o) {
  std::vector<int> w;
  for (int d : o.partition)
    for (int k = d - 1; k >= 1 - d; k -= 2) w.push_back(k);
  std::sort(w.rbegin(), w.rend());
  const int l = o.type.rank;
  std::vector<int> labels(l);
  for (int i = 0; i + 1 < l; ++i) labels[i] = w[i] - w[i + 1];
  switch (o.type.family) {
    case Family::A: labels[l - 1] = w[l - 1] - w[l]; break;
    case Family::B: labels[l - 1] = w[l - 1]; break;
    case Family::C: labels[l - 1] = 2 * w[l - 1]; break;
    default: labels[l - 1] = w[l - 2] + w[l - 1]; break;
  }
  if (o.label == 2) std::swap(labels[l - 2], labels[l - 1]);
  return {o.type, labels};
}

int pi1_order(const JordanOrbit& o) {
  if (o.is_zero()) throw std::invalid_argument("pi1_order: zero orbit");
  const auto mult = multiplicities(o.partition);
  switch (o.type.family) {
    case Family::A: {
      int g = 0;
      for (int x : o.partition) g = std::gcd(g, x);
      return g;
    }
    case Family::C: {
      int even = 0;
      for (auto [part, m] : mult) even += part % 2 == 0;
      return 1 << even;
    }
    default: {
      int odd = 0;
      bool rather_odd = true;
      for (auto [part, m] : mult)
        if (part % 2 != 0) {
          ++odd;
          rather_odd = rather_odd && m == 1;
        }
      return (1 << std::max(0, odd - 1)) * (rather_odd ? 2 : 1);
    }
  }
}

JordanOrbit minimal_orbit(const CartanType& t) {
  const int n = standard_dim(t);
  Partition p;
  if (t.family == Family::A || t.family == Family::C) p = {2};
  else p = {2, 2};
  p.insert(p.end(), n - std::accumulate(p.begin(), p.end(), 0), 1);
  return {t, p, is_very_even(t, p) ? 1 : 0};
}

JordanOrbit zero_orbit(const CartanType& t) { return {t, Partition(standard_dim(t), 1)}; }

// ------------------------------------------------------------------- poset

int OrbitPoset::index_of(const JordanOrbit& o) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i] == o) return static_cast<int>(i);
  return -1;
}

std::vector<int> OrbitPoset::covered_by(int i) const {
  std::vector<int> out;
  const int n = static_cast<int>(orbits.size());
  for (int j = 0; j < n; ++j) {
    if (j == i || !leq[j][i]) continue;
    bool direct = true;
    for (int k = 0; k < n && direct; ++k)
      if (k != i && k != j && leq[j][k] && leq[k][i]) direct = false;
    if (direct) out.push_back(j);
  }
  return out;
}

std::vector<int> OrbitPoset::covers_of(int i) const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(orbits.size()); ++j)
    if (j != i && leq[i][j]) {
      const auto below = covered_by(j);
      if (std::find(below.begin(), below.end(), i) != below.end()) out.push_back(j);
    }
  return out;
}

std::vector<int> OrbitPoset::minimal_nonzero() const {
  std::vector<int> out;
  const int n = static_cast<int>(orbits.size());
  for (int i = 0; i < n; ++i) {
    if (orbits[i].is_zero()) continue;
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (j != i && !orbits[j].is_zero() && leq[j][i]) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

OrbitPoset enumerate_orbits(const CartanType& t) {
  require_classical(t);
  if (t.rank > kMaxEnumerationRank)
    throw std::invalid_argument("orbit enumeration is limited to rank " + std::to_string(kMaxEnumerationRank));
  OrbitPoset poset{t, {}, {}};
  for (const Partition& p : partitions_of(standard_dim(t))) {
    if (!is_valid_partition(t, p)) continue;
    if (is_very_even(t, p)) {
      poset.orbits.emplace_back(t, p, 1);
      poset.orbits.emplace_back(t, p, 2);
    } else {
      poset.orbits.emplace_back(t, p);
    }
  }
  const std::size_t n = poset.orbits.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) poset.leq[i][j] = closure_leq(poset.orbits[i], poset.orbits[j]);
  return poset;
}

std::optional<int> boundary_codim(const OrbitPoset& poset, int i) {
  const auto below = poset.covered_by(i);
  if (below.empty()) return std::nullopt;
  const int d = orbit_dim(poset.orbits[i]);
  int best = d;
  for (int j : below) best = std::min(best, d - orbit_dim(poset.orbits[j]));
  return best;
}

std::optional<int> boundary_codim(const JordanOrbit& o) {
  const OrbitPoset poset = enumerate_orbits(o.type);
  return boundary_codim(poset, poset.index_of(o));
}

}  // namespace lieorb
