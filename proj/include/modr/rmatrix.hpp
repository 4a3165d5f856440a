#pragma once

#include "modr/cochain.hpp"
#include "modr/liealg.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace modr {

using BasisPair = std::pair<std::size_t, std::size_t>;

struct DefectReport {
  bool is_zero = true;
  /// Basis pair i < j where the defect has the most nonzero coordinates (first such pair).
  std::optional<BasisPair> worst_pair;
  /// S(R)(x,y) = [Rx,Ry] - R([Rx,y] + [x,Ry]) + [x,y], arity 2.
  Cochain defect;
};

DefectReport mcybe_defect(const Endo &r);

/// Coefficients of S(R + tG) in t: index 0, 1, 2.
std::array<Cochain, 3> mcybe_defect_polynomial(const Endo &r, const Endo &g);

/// Q(A, B)(x,y) = [Ax,By] - A([Bx,y] + [x,By]), arity 2. Q(B, B) vanishes iff
/// B is a Rota-Baxter operator of weight 0.
Cochain rota_baxter_form(const Endo &a, const Endo &b);

struct RotaBaxterVerdict {
  bool holds = true;
  std::optional<BasisPair> failing_pair;
};

/// [Bx,By] = B([Bx,y] + [x,By] + weight [x,y]) on all basis pairs.
RotaBaxterVerdict is_rota_baxter(const Endo &b, const Rational &weight);

/// B = (R - Id)/2.
Endo rb_from_r(const Endo &r);
/// R = Id + 2B.
Endo r_from_rb(const Endo &b);

/// The Lie algebra (g, [x,y]_R) with [x,y]_R = [Rx,y] + [x,Ry]. Throws
/// PreconditionError when R is not a modified r-matrix.
LieAlgebra induced_bracket(const Endo &r);

struct ForcedBracket {
  LieAlgebra algebra; ///< built with deferred Jacobi check
  JacobiResult jacobi;
};
/// The raw induced table for any R, with its Jacobi status.
ForcedBracket induced_bracket_forced(const Endo &r);

/// Structure constants of [x,y]_R for any R (no checks).
std::vector<LieAlgebra::Bracket> induced_structure(const Endo &r);

/// rho(x) y = [Rx,y] - R[x,y].
Endo rho(const Endo &r, const Vector &x);

struct InvolutiveReport {
  bool mcybe = false;
  bool nijenhuis = false;
  bool eigenspaces_subalgebras = false;
  bool product_structure = false;
  /// Bases of the +1 and -1 eigenspaces.
  std::vector<Vector> plus_basis;
  std::vector<Vector> minus_basis;
  bool consistent() const {
    return mcybe == nijenhuis && nijenhuis == eigenspaces_subalgebras &&
           eigenspaces_subalgebras == product_structure;
  }
};

/// Four independent tests of the equivalent characterisations of an
/// involutive modified r-matrix. Throws InputError naming a basis vector e_j
/// with R^2 e_j != e_j when R is not an involution.
InvolutiveReport involutive_analyze(const Endo &r);

/// Whether span(basis) is closed under the bracket; on failure, the first pair
/// of basis indices whose bracket leaves the span.
std::optional<BasisPair> subalgebra_violation(const LieAlgebra &algebra,
                                              const std::vector<Vector> &basis);

} // namespace modr
