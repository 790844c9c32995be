#pragma once

#include <optional>
#include <string>

#include "lieorb/dynkin.hpp"

namespace lieorb {

enum class ExclusionStatus { Excluded, InG2Case, NotExcluded };

std::string to_string(ExclusionStatus s);

/// Outcome of the root-vector obstruction for a diagram of type E or F4.
///
/// When the status is Excluded, `n` lies in n, `z` centralizes it and lies
/// outside n_perp; all three facts are recomputed and recorded separately.
struct ExclusionVerdict {
  ExclusionStatus status = ExclusionStatus::NotExcluded;
  int s = 0;  ///< E: sigma(H); F4: l1 + l2 + l3
  int m = 0;  ///< E: largest end label; unused for F4
  std::optional<LieElement> n, z;
  Root n_roots[2];
  Root z_root;
  bool bracket_vanishes = false;
  bool n_in_n = false;
  bool z_outside_n_perp = false;
  bool n_in_g2 = false;                 ///< InG2Case only
  int centralizer_in_g_minus2 = -1;     ///< InG2Case only: dim(z_N cap g(-2))
};

ExclusionVerdict etype_exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd);
ExclusionVerdict f4_exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd);
/// Dispatches on the family; throws std::invalid_argument outside E and F4.
ExclusionVerdict exclusion(const ChevalleyAlgebra& g, const WeightedDiagram& wd);

/// Roots alpha1+alpha2+alpha3, alpha1+2alpha2+2alpha3+2alpha4 and
/// alpha1+2alpha2+4alpha3+2alpha4 of F4 (the pair and the centralizing root).
struct F4Roots {
  Root alpha, beta, gamma;
};
F4Roots f4_obstruction_roots();

/// Orthogonal roots lambda, mu with lambda(H) = mu(H) = 2 given in epsilon
/// coordinates; used for the surviving E8 diagram.
struct OrthogonalPairCheck {
  Root lambda, mu;
  bool both_roots = false;
  bool orthogonal = false;
  int lambda_h = 0, mu_h = 0;
  bool ok() const { return both_roots && orthogonal && lambda_h == 2 && mu_h == 2; }
};
OrthogonalPairCheck orthogonal_pair_check(const RootSystem& rs, const WeightedDiagram& wd, const RatVector& lambda_eps,
                                          const RatVector& mu_eps);
/// lambda = (1/2) sum eps_i, mu = eps8 - eps7 on the E8 diagram 1,0,0,0,0,0,0,1.
OrthogonalPairCheck e8_surviving_diagram_check(const RootSystem& e8);

}  // namespace lieorb
