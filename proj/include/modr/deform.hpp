#pragma once

#include "modr/cochain.hpp"
#include "modr/liealg.hpp"
#include "modr/rmatrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modr {

struct DeformationVerdict {
  bool cocycle_ok = false; ///< d Rhat = 0
  bool weight0_ok = false; ///< Rhat is a weight 0 Rota-Baxter operator
  bool valid = false;      ///< both
  std::optional<BasisPair> failing_pair;
  /// Coefficients of S(R + t Rhat) in t, expanded directly.
  std::array<Cochain, 3> defect_polynomial;
  /// Whether the direct expansion vanishes identically; always equals `valid`.
  bool polynomial_zero = false;
};

/// Throws PreconditionError unless R is a modified r-matrix.
DeformationVerdict check_linear_deformation(const Endo &r, const Endo &rhat);

struct EquivalenceVerdict {
  /// [[x,y],[x,z]] = 0 for all basis y, z: phi_t = Id + t ad_x preserves the bracket.
  bool homomorphism = false;
  std::optional<BasisPair> homomorphism_witness;
  /// (R + t Rhat2) phi_t = phi_t (R + t Rhat1) as polynomials in t.
  bool intertwines = false;
  /// Power of t and basis index of the first failing column.
  std::optional<std::pair<std::size_t, std::size_t>> intertwine_witness;
  bool equivalent() const { return homomorphism && intertwines; }
};

EquivalenceVerdict check_equivalence(const Endo &r, const Endo &rhat1, const Endo &rhat2,
                                     const Vector &x);

struct NijenhuisVerdict {
  bool eq1_ok = false; ///< [[x,y],[x,z]] = 0
  bool eq2_ok = false; ///< [x,[x,Ry]] = [x,R[x,y]]
  bool is_nijenhuis_element = false;
  std::optional<BasisPair> eq1_witness;
  std::optional<std::size_t> eq2_witness;
};

NijenhuisVerdict nijenhuis_check(const Endo &r, const Vector &x);

/// Basis vectors followed by the sums e_i + e_j, i < j.
std::vector<Vector> default_nijenhuis_candidates(std::size_t dim);

std::vector<std::pair<Vector, NijenhuisVerdict>>
nijenhuis_scan(const Endo &r, const std::vector<Vector> &candidates);

struct TrivialDeformation {
  Endo rhat; ///< d x
  DeformationVerdict verdict;
  EquivalenceVerdict equivalence; ///< against the zero deformation via x
};

/// Throws PreconditionError naming the failing equation unless x is a
/// Nijenhuis element for R.
TrivialDeformation trivial_deformation(const Endo &r, const Vector &x);

struct NijenhuisOperatorVerdict {
  bool holds = true;
  std::optional<BasisPair> failing_pair;
};

/// [Nx,Ny] = N([Nx,y] + [x,Ny]) - N^2[x,y] on all basis pairs.
NijenhuisOperatorVerdict nijenhuis_operator_check(const LieAlgebra &algebra, const Endo &n);

struct BracketDeformation {
  Cochain omega; ///< omega(x,y) = [Rhat x, y] + [x, Rhat y]
  /// Jacobiator of [.,.]_R + t omega by power of t (0..2), on increasing basis triples.
  std::array<Cochain, 3> jacobi_polynomial;
  bool jacobi_holds = false;
};

/// Throws PreconditionError unless the linear deformation is valid.
BracketDeformation induced_bracket_deformation(const Endo &r, const Endo &rhat);

struct CompatibleVerdict {
  bool jacobi_holds = false;       ///< [.,.]_{R_t1} + [.,.]_{R_t2} is a Lie bracket
  bool equals_twice_midpoint = false;
  std::optional<Triple> jacobi_witness;
};

/// Throws PreconditionError unless the linear deformation is valid.
CompatibleVerdict compatible_bracket_check(const Endo &r, const Endo &rhat, const Rational &t1,
                                           const Rational &t2);

/// Jacobiator of a bracket given as an arity 2 cochain, on increasing triples.
Cochain jacobiator(const Cochain &bracket);

/// [x,y]_R as an arity 2 cochain, for any R.
Cochain induced_cochain(const Endo &r);

} // namespace modr
