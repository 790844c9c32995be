#include "lieorb/exclusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieorb {

std::string to_string(ExclusionStatus s) {
  switch (s) {
    case ExclusionStatus::Excluded: return "excluded";
    case ExclusionStatus::InG2Case: return "in-g2-case";
    case ExclusionStatus::NotExcluded: return "not-excluded";
  }
  return "?";
}

namespace {

void fill_witness(const ChevalleyAlgebra& g, const Grading& gr, const Root& a, const Root& b, const Root& c,
                  ExclusionVerdict& v) {
  v.n_roots[0] = a;
  v.n_roots[1] = b;
  v.z_root = c;
  v.n = g.X(a) + g.X(b);
  v.z = g.X(c);
  v.bracket_vanishes = bracket(g, *v.n, *v.z).is_zero();
  v.n_in_n = gr.in_n(*v.n);
  v.z_outside_n_perp = !gr.in_n_perp(*v.z);
}

}  // namespace

ExclusionVerdict etype_exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd) {
  const RootSystem& rs = g.roots();
  if (rs.type().family != Family::E) throw std::invalid_argument("etype_exclusion needs type E, got " + rs.type().name());
  const ESigmaFacts f = e_type_sigma_facts(rs);
  ExclusionVerdict v;
  for (int x : wd.labels) v.s += x;
  int end_label[3];
  for (int k = 0; k < 3; ++k) {
    end_label[k] = wd.labels[f.ends[k] - 1];
    v.m = std::max(v.m, end_label[k]);
  }
  const Grading gr = grading_from_diagram(g, wd);
  // the three differences sigma - end are pairwise orthogonal, so any end can play gamma
  auto pick = [&](int gamma) {
    const int a = (gamma + 1) % 3, b = (gamma + 2) % 3;
    const Root z = Root::Unit(rs.rank(), f.ends[gamma] - 1) - f.sigma;
    fill_witness(g, gr, f.sigma_minus_end[std::min(a, b)], f.sigma_minus_end[std::max(a, b)], z, v);
  };
  if (v.s - v.m >= 2) {
    pick(2);
    if (!(v.bracket_vanishes && v.n_in_n && v.z_outside_n_perp))
      throw std::logic_error("E-type obstruction failed to verify on diagram " + wd.str());
    v.status = ExclusionStatus::Excluded;
    return v;
  }
  if (v.s == 2) {
    for (int gamma = 2; gamma >= 0; --gamma) {
      const int a = (gamma + 1) % 3, b = (gamma + 2) % 3;
      if (end_label[a] != 0 || end_label[b] != 0) continue;
      pick(gamma);
      v.n_in_g2 = gr.in_piece(*v.n, 2);
      const auto& minus2 = gr.piece(-2);
      const RatSparse ad = ad_matrix(g, *v.n);
      RatMatrix m(g.dim(), minus2.size());
      for (std::size_t j = 0; j < minus2.size(); ++j)
        for (int i = 0; i < g.dim(); ++i) m(i, j) = ad.coeff(i, minus2[j]);
      const RatMatrix k = linalg::kernel(m);
      v.centralizer_in_g_minus2 = static_cast<int>(k.cols());
      v.status = ExclusionStatus::InG2Case;
      return v;
    }
  }
  return v;
}

F4Roots f4_obstruction_roots() {
  F4Roots r;
  r.alpha = Root(4);
  r.alpha << 1, 1, 1, 0;
  r.beta = Root(4);
  r.beta << 1, 2, 2, 2;
  r.gamma = Root(4);
  r.gamma << 1, 2, 4, 2;
  return r;
}

ExclusionVerdict f4_exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd) {
  const RootSystem& rs = g.roots();
  if (rs.type().family != Family::F) throw std::invalid_argument("f4_exclusion needs type F4, got " + rs.type().name());
  ExclusionVerdict v;
  v.s = wd.labels[0] + wd.labels[1] + wd.labels[2];
  if (v.s < 2) return v;
  const Grading gr = grading_from_diagram(g, wd);
  const F4Roots r = f4_obstruction_roots();
  fill_witness(g, gr, r.alpha, r.beta, Root(-r.gamma), v);
  if (!(v.bracket_vanishes && v.n_in_n && v.z_outside_n_perp))
    throw std::logic_error("F4 obstruction failed to verify on diagram " + wd.str());
  v.status = ExclusionStatus::Excluded;
  return v;
}

ExclusionVerdict exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd) {
  switch (g.type().family) {
    case Family::E: return etype_exclusion(g, wd);
    case Family::F: return f4_exclusion(g, wd);
    default: throw std::invalid_argument("exclusion tests exist for E and F4 only, got " + g.type().name());
  }
}

OrthogonalPairCheck orthogonal_pair_check(const RootSystem& rs, const WeightedDiagram& wd, const RatVector& lambda_eps,
                                          const RatVector& mu_eps) {
  OrthogonalPairCheck c;
  const auto l = rs.from_epsilon(lambda_eps);
  const auto m = rs.from_epsilon(mu_eps);
  if (!l || !m) return c;
  c.lambda = *l;
  c.mu = *m;
  c.both_roots = rs.is_root(c.lambda) && rs.is_root(c.mu);
  c.orthogonal = rs.inner(c.lambda, c.mu).is_zero();
  c.lambda_h = wd.value(c.lambda);
  c.mu_h = wd.value(c.mu);
  return c;
}

OrthogonalPairCheck e8_surviving_diagram_check(const RootSystem& e8) {
  if (!(e8.type() == CartanType{Family::E, 8})) throw std::invalid_argument("needs E8");
  const WeightedDiagram wd(e8.type(), {1, 0, 0, 0, 0, 0, 0, 1});
  RatVector lambda = RatVector::Constant(8, Rational(1, 2));
  RatVector mu = RatVector::Zero(8);
  mu(7) = 1;
  mu(6) = -1;
  return orthogonal_pair_check(e8, wd, lambda, mu);
}

}  // namespace lieorb
