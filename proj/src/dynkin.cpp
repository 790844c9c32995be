#include "lieorb/dynkin.hpp"

#include <algorithm>

#include "lieorb/random.hpp"

namespace lieorb {

namespace {

RatMatrix submatrix(const RatSparse& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  RatMatrix out = RatMatrix::Zero(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.coeff(rows[i], cols[j]);
  return out;
}

LieElement combine(const ChevalleyAlgebra& g, const std::vector<int>& idx, const RatVector& coeffs) {
  LieElement e = g.zero();
  for (std::size_t j = 0; j < idx.size(); ++j) e.add(idx[j], coeffs(j));
  return e;
}

// kernel of Q -> [x, Q] from span(domain) to span(target)
RatMatrix restricted_kernel(const ChevalleyAlgebra& g, const LieElement& x, const std::vector<int>& domain,
                            const std::vector<int>& target) {
  return linalg::kernel(submatrix(ad_matrix(g, x), target, domain));
}

}  // namespace

// -------------------------------------------------------------------- Grading

const std::vector<int>& Grading::piece(int i) const {
  static const std::vector<int> empty;
  auto it = pieces.find(i);
  return it == pieces.end() ? empty : it->second;
}

bool Grading::in_piece(const LieElement& x, int i) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return degree[t.first] == i; });
}

bool Grading::in_n(const LieElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return degree[t.first] >= 2; });
}

bool Grading::in_n_perp(const LieElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return degree[t.first] >= -1; });
}

Grading grading_from_diagram(const ChevalleyAlgebra& g, const WeightedDiagram& wd) {
  if (!(wd.type == g.type()))
    throw std::invalid_argument("diagram type " + wd.type.name() + " does not match algebra " + g.type().name());
  const RootSystem& rs = g.roots();
  const int l = g.rank();
  // H = sum c_j H_j with alpha_i(H) = sum_j c_j a_ji = label_i
  RatMatrix at(l, l);
  RatVector labels(l);
  for (int i = 0; i < l; ++i) {
    labels(i) = wd.labels[i];
    for (int j = 0; j < l; ++j) at(i, j) = rs.cartan_matrix()(j, i);
  }
  const auto c = linalg::solve(at, labels);
  if (!c) throw std::logic_error("Cartan matrix is singular");
  Grading gr{wd, g.zero(), {}, {}, {}, {}, {}};
  for (int j = 0; j < l; ++j) gr.h.add(g.num_roots() + j, (*c)(j));
  gr.degree.resize(g.dim());
  for (int k = 0; k < g.dim(); ++k) {
    const int d = g.is_cartan_index(k) ? 0 : wd.value(rs.root(k));
    gr.degree[k] = d;
    gr.pieces[d].push_back(k);
    if (d >= 0) gr.p.push_back(k);
    if (d >= 2) gr.n.push_back(k);
    if (d >= -1) gr.n_perp.push_back(k);
  }
  return gr;
}

// ----------------------------------------------------------------- sl2 triples

bool is_sl2_triple(const ChevalleyAlgebra& g, const Sl2Triple& t) {
  return bracket(g, t.h, t.n0) == Rational(2) * t.n0 && bracket(g, t.h, t.n1) == Rational(-2) * t.n1 &&
         bracket(g, t.n1, t.n0) == t.h;
}

std::optional<Sl2Triple> try_sl2_complete(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n0) {
  if (n0.is_zero()) throw std::invalid_argument("sl2_complete: N0 must be nonzero");
  if (!gr.in_piece(n0, 2)) throw std::invalid_argument("sl2_complete: N0 must lie in g(2)");
  const auto& minus2 = gr.piece(-2);
  // columns: [b_k, N0] for b_k in g(-2)
  const RatSparse ad = ad_matrix(g, n0);
  RatMatrix m(g.dim(), minus2.size());
  for (std::size_t j = 0; j < minus2.size(); ++j)
    for (int i = 0; i < g.dim(); ++i) m(i, j) = -ad.coeff(i, minus2[j]);
  const auto y = linalg::solve(m, gr.h.dense(g.dim()));
  if (!y) return std::nullopt;
  Sl2Triple t{n0, gr.h, combine(g, minus2, *y)};
  if (!is_sl2_triple(g, t)) throw std::logic_error("sl2 completion produced an invalid triple");
  return t;
}

Sl2Triple sl2_complete(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n0) {
  auto t = try_sl2_complete(g, gr, n0);
  if (!t) throw NoTriple("N0 does not realize the orbit of diagram " + gr.diagram.str());
  return *t;
}

std::optional<GenericElement> generic_element(const ChevalleyAlgebra& g, const Grading& gr, int max_attempts) {
  const auto& two = gr.piece(2);
  if (two.empty()) return std::nullopt;
  for (int t = 0; t < max_attempts; ++t) {
    LieElement n0 = g.zero();
    for (std::size_t j = 0; j < two.size(); ++j) {
      const long jj = static_cast<long>(j);
      const int c = t == 0 ? 1 : 1 + static_cast<int>(((jj * jj + 3 * jj + 1) * t) % (2 * t + 3));
      n0.add(two[j], c);
    }
    if (auto tr = try_sl2_complete(g, gr, n0)) return GenericElement{*tr, t + 1};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- nilpotency

NilpotencyReport nilpotency_report(const ChevalleyAlgebra& g, const LieElement& n) {
  if (n.is_zero()) throw std::invalid_argument("nilpotency_report: zero element");
  NilpotencyReport rep;
  const RatSparse ad = ad_matrix(g, n);
  // [H, N] = N  <=>  ad(N) H = -N
  if (auto h = linalg::solve(ad, RatVector(-n.dense(g.dim())))) {
    rep.homogeneous = true;
    rep.h_witness = g.from_dense(*h);
  }
  const RatMatrix z = linalg::kernel(ad);
  rep.orthogonal = true;
  for (Eigen::Index c = 0; c < z.cols() && rep.orthogonal; ++c)
    rep.orthogonal = killing(g, g.from_dense(z.col(c)), n).is_zero();
  rep.ad_nilpotent = is_ad_nilpotent(g, n);
  return rep;
}

// -------------------------------------------------------- centralizer checks

std::optional<LieElement> key_lemma_witness(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n) {
  if (n.is_zero()) throw std::invalid_argument("key_lemma_check: N must be nonzero");
  if (!gr.in_n(n)) throw std::invalid_argument("key_lemma_check: N must lie in n");
  const RatMatrix z = centralizer(g, n);
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    const LieElement v = g.from_dense(z.col(c));
    if (!gr.in_n_perp(v)) return v;
  }
  return std::nullopt;
}

bool key_lemma_check(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n) {
  return !key_lemma_witness(g, gr, n).has_value();
}

int omega_kernel_dim(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n) {
  if (!gr.in_n(n)) throw std::invalid_argument("omega_kernel_dim: N must lie in n");
  std::vector<int> low;  // coordinates that must vanish for [N,X] to lie in n
  for (int k = 0; k < g.dim(); ++k)
    if (gr.degree[k] <= 1) low.push_back(k);
  const RatMatrix m = submatrix(ad_matrix(g, n), low, gr.n_perp);
  const int kernel = static_cast<int>(gr.n_perp.size()) - linalg::rank(m);
  return kernel - static_cast<int>(gr.p.size());
}

// ------------------------------------------------------------ pairing check

PairingVerdict pairing_criterion(const ChevalleyAlgebra& g, const Grading& gr, const PairingOptions& opt) {
  const auto& plus = gr.piece(2);
  const auto& minus = gr.piece(-2);
  const auto& zero = gr.piece(0);
  PairingVerdict v;
  if (plus.empty() || minus.empty()) return v;

  auto try_n = [&](const LieElement& x) -> bool {
    const RatMatrix k = restricted_kernel(g, x, minus, zero);
    if (k.cols() == 0) return false;
    v.status = PairingStatus::FailsWithWitness;
    v.witness = std::make_pair(x, combine(g, minus, k.col(0)));
    return true;
  };
  auto try_q = [&](const LieElement& q) -> bool {
    const RatMatrix k = restricted_kernel(g, q, plus, zero);
    if (k.cols() == 0) return false;
    v.status = PairingStatus::FailsWithWitness;
    v.witness = std::make_pair(combine(g, plus, k.col(0)), q);
    return true;
  };

  if (plus.size() == 1) {
    try_n(g.basis(plus[0]));
    return v;
  }
  // witness search over basis vectors and their pairwise sums and differences
  for (int k : plus)
    if (try_n(g.basis(k))) return v;
  for (int k : minus)
    if (try_q(g.basis(k))) return v;
  for (std::size_t i = 0; i < plus.size(); ++i)
    for (std::size_t j = i + 1; j < plus.size(); ++j)
      for (int sign : {1, -1})
        if (try_n(g.basis(plus[i]) + Rational(sign) * g.basis(plus[j]))) return v;
  for (std::size_t i = 0; i < minus.size(); ++i)
    for (std::size_t j = i + 1; j < minus.size(); ++j)
      for (int sign : {1, -1})
        if (try_q(g.basis(minus[i]) + Rational(sign) * g.basis(minus[j]))) return v;

  std::mt19937_64 rng(opt.seed);
  for (int s = 0; s < opt.samples; ++s) {
    LieElement x = g.zero();
    for (int k : plus) x.add(k, draw_int(rng, -5, 5));
    if (x.is_zero()) x.add(plus[0], 1);
    if (try_n(x)) return v;
  }
  v.status = PairingStatus::ProbabilisticHolds;
  v.samples = opt.samples;
  return v;
}

// ------------------------------------------------------------ root vectors

Sl2Triple root_triple(const ChevalleyAlgebra& g, int r) {
  Sl2Triple t{g.X(r), g.coroot(r), Rational(-1) * g.X(g.roots().negative(r))};
  if (!is_sl2_triple(g, t)) throw std::logic_error("root triple relations fail");
  return t;
}

WeightedDiagram diagram_of_root_vector_orbit(const ChevalleyAlgebra& g, int r) {
  const RootSystem& rs = g.roots();
  root_triple(g, r);
  // move H_r into the dominant chamber: alpha_i(H_r) < 0 iff <r, alpha_i^vee> < 0
  Root x = rs.root(r);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.pairing(x, i) < 0) {
        x = rs.reflect(x, i);
        moved = true;
      }
  }
  const Root c = rs.coroot_coords(x);
  std::vector<int> labels(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    int v = 0;
    for (int j = 0; j < rs.rank(); ++j) v += c(j) * rs.cartan_matrix()(j, i);
    labels[i] = v;
  }
  return {rs.type(), labels};
}

WeightedDiagram minimal_orbit_diagram(const ChevalleyAlgebra& g) {
  return diagram_of_root_vector_orbit(g, g.roots().highest_root_index());
}

std::optional<WeightedDiagram> short_root_orbit_diagram(const ChevalleyAlgebra& g) {
  const RootSystem& rs = g.roots();
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!rs.is_long(rs.root(r))) return diagram_of_root_vector_orbit(g, r);
  return std::nullopt;
}

std::optional<int> match_short_root_pattern(const WeightedDiagram& wd) {
  auto match = [](const std::vector<int>& l) -> std::optional<int> {
    const int n = static_cast<int>(l.size());
    auto only = [&](int pos, int val) {
      for (int i = 0; i < n; ++i)
        if (l[i] != (i == pos ? val : 0)) return false;
      return true;
    };
    if (only(0, 2)) return 0;
    if (n >= 3 && only(1, 1)) return 1;
    if (n == 4 && only(3, 1)) return 2;
    return std::nullopt;
  };
  if (auto m = match(wd.labels)) return m;
  if (wd.labels.size() == 2) return match({wd.labels[1], wd.labels[0]});
  return std::nullopt;
}

}  // namespace lieorb
