#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lieorb/chevalley.hpp"
#include "lieorb/diagram.hpp"

namespace lieorb {

/// Eigenspace decomposition g = sum g(i) of ad(H) for a Cartan element H.
///
/// Every Chevalley basis vector is an eigenvector, so each piece and the
/// subspaces p = sum_{i>=0}, n = sum_{i>=2}, n_perp = sum_{i>=-1} are
/// spanned by basis vectors and are stored as index lists.
struct Grading {
  WeightedDiagram diagram;
  LieElement h;
  std::vector<int> degree;
  std::map<int, std::vector<int>> pieces;
  std::vector<int> p, n, n_perp;

  const std::vector<int>& piece(int i) const;
  int piece_dim(int i) const { return static_cast<int>(piece(i).size()); }
  bool in_piece(const LieElement& x, int i) const;
  bool in_n(const LieElement& x) const;
  bool in_n_perp(const LieElement& x) const;
};

Grading grading_from_diagram(const ChevalleyAlgebra& g, const WeightedDiagram& wd);

struct Sl2Triple {
  LieElement n0, h, n1;
};

/// Raised when N0 does not complete to a triple with the grading's H.
class NoTriple : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [H,N0] = 2N0, [H,N1] = -2N1, [N1,N0] = H, checked exactly.
bool is_sl2_triple(const ChevalleyAlgebra& g, const Sl2Triple& t);

std::optional<Sl2Triple> try_sl2_complete(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n0);
Sl2Triple sl2_complete(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n0);

/// Generic element of g(2): the sum of the g(2) basis vectors, retried with
/// deterministic small-integer coefficients until it completes to a triple.
struct GenericElement {
  Sl2Triple triple;
  int attempts = 0;
};
std::optional<GenericElement> generic_element(const ChevalleyAlgebra& g, const Grading& gr, int max_attempts = 24);

struct NilpotencyReport {
  bool homogeneous = false;   ///< some H has [H,N] = N
  bool orthogonal = false;    ///< centralizer of N is Killing-orthogonal to N
  bool ad_nilpotent = false;  ///< ad(N) nilpotent
  std::optional<LieElement> h_witness;
  bool consistent() const { return homogeneous == orthogonal && orthogonal == ad_nilpotent; }
};
NilpotencyReport nilpotency_report(const ChevalleyAlgebra& g, const LieElement& n);

/// A centralizer vector of N outside n_perp, if any.
std::optional<LieElement> key_lemma_witness(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n);
/// Whether the centralizer of N lies in n_perp (necessary for smoothness of
/// the normalized orbit closure above N).
bool key_lemma_check(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n);

/// dim{X in n_perp : [N,X] in n} - dim p.
int omega_kernel_dim(const ChevalleyAlgebra& g, const Grading& gr, const LieElement& n);

enum class PairingStatus { Holds, FailsWithWitness, ProbabilisticHolds };

struct PairingVerdict {
  PairingStatus status = PairingStatus::Holds;
  std::optional<std::pair<LieElement, LieElement>> witness;  ///< (N, Q) with [N,Q] = 0
  int samples = 0;
};

struct PairingOptions {
  std::uint64_t seed = 0x5eed;
  int samples = 1000;
};

/// Decides whether [N,Q] != 0 for all nonzero N in g(2), Q in g(-2).
PairingVerdict pairing_criterion(const ChevalleyAlgebra& g, const Grading& gr, const PairingOptions& opt = {});

/// Standard triple (X_r, H_r, -X_{-r}) through a root vector.
Sl2Triple root_triple(const ChevalleyAlgebra& g, int root_index);
WeightedDiagram diagram_of_root_vector_orbit(const ChevalleyAlgebra& g, int root_index);
/// Diagram of the orbit of a long (minimal) or short root vector.
WeightedDiagram minimal_orbit_diagram(const ChevalleyAlgebra& g);
std::optional<WeightedDiagram> short_root_orbit_diagram(const ChevalleyAlgebra& g);

/// Which of the label patterns (2,0,...,0), (0,1,0,...,0) (rank >= 3) and
/// (0,0,0,1) the diagram shows, as an index 0, 1, 2. The patterns are matched
/// as an unordered set, ignoring the type; rank 2 diagrams are also tried with
/// the nodes reversed, the identification of B2 with C2.
std::optional<int> match_short_root_pattern(const WeightedDiagram& wd);

}  // namespace lieorb
