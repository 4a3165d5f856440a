#pragma once

#include "modr/cochain.hpp"
#include "modr/liealg.hpp"

#include <optional>

namespace modr {

/// Graded bracket on cochains; an arity p cochain has graded degree p.
///
///   [[f,g]](x_1..x_{p+q})
///     =  sum_{S(q,1,p-1)} sgn f([g(x..), x], x..)
///      - (-1)^{pq} sum_{S(p,1,q-1)} sgn g([f(x..), x], x..)
///      + (-1)^{pq} sum_{S(p,q)} sgn [f(x..), g(x..)]
///
/// Conventions: [[f,g]] = -(-1)^{pq} [[g,f]], and the graded Jacobi identity
///   (-1)^{pr} [[f,[[g,h]]]] + (-1)^{pq} [[g,[[h,f]]]] + (-1)^{qr} [[h,[[f,g]]]] = 0.
/// With these, [[Id, Id]] = 2 pi where pi is the bracket of the algebra.
Cochain graded_bracket(const Cochain &f, const Cochain &g);

/// d_R f = [[R, f]].
Cochain d_R(const Endo &r, const Cochain &f);

/// [[f, f]] = 0 (f is a Rota-Baxter operator of weight 0).
bool is_maurer_cartan_weight0(const Endo &f);

/// [[R, R]] = 2 pi (R is a modified r-matrix).
bool satisfies_mc_modified(const Endo &r);

struct McDeformationVerdict {
  bool maurer_cartan = false; ///< d_R R' + 1/2 [[R',R']] = 0
  bool defect_zero = false;   ///< R + R' is a modified r-matrix
  bool agree() const { return maurer_cartan == defect_zero; }
};

/// Throws PreconditionError unless R is a modified r-matrix.
McDeformationVerdict mc_deformation_check(const Endo &r, const Endo &rp);

struct KuranishiReport {
  Cochain ff;                 ///< [[f,f]], arity 2
  bool is_cocycle = false;    ///< d [[f,f]] = 0
  bool vanishes_in_h3 = false;
  std::optional<Cochain> witness; ///< g with d g = [[f,f]]
};

/// Throws PreconditionError unless R is a modified r-matrix and f is a 2-cocycle.
KuranishiReport kuranishi(const Endo &r, const Endo &f);

} // namespace modr
