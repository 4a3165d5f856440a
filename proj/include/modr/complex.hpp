#pragma once

#include "modr/cochain.hpp"
#include "modr/linalg.hpp"
#include "modr/liealg.hpp"

#include <optional>
#include <vector>

namespace modr {

/// Which operator defines the complex: a modified r-matrix R, with
/// rho(x)y = [Rx,y] - R[x,y] and [x,y]_R = [Rx,y] + [x,Ry]; or a weight 1
/// Rota-Baxter operator B, with rho_B(x)y = [Bx,y] - B[x,y] and
/// [x,y]_B = [Bx,y] + [x,By] + [x,y].
enum class Flavor { R, B };

/// The coboundary from arity k to arity k+1 cochains (cohomological degree
/// k+1 to k+2), as a sparse matrix in the cochain coefficient layout:
///   d f(x_0..x_k) = sum_i (-1)^i rho(x_i) f(..^x_i..)
///                 + sum_{i<j} (-1)^{i+j} f([x_i,x_j]_*, ..^x_i..^x_j..)
/// For k = 0 this reads d x(y) = rho(y) x = [Ry,x] - R[y,x].
struct CoboundaryMatrix {
  std::size_t from_arity = 0;
  Flavor flavor = Flavor::R;
  linalg::SparseMatrix matrix;

  std::size_t to_arity() const { return from_arity + 1; }
  std::size_t from_degree() const { return from_arity + 1; }
  std::size_t to_degree() const { return from_arity + 2; }
};

/// Throws PreconditionError when the operator fails its axiom (MCYBE for
/// flavor R, weight 1 Rota-Baxter for flavor B), InputError when k > dim.
CoboundaryMatrix coboundary_matrix(const Endo &op, std::size_t k, Flavor flavor = Flavor::R);

/// The same assembly without the axiom check.
CoboundaryMatrix coboundary_matrix_unchecked(const Endo &op, std::size_t k,
                                             Flavor flavor = Flavor::R);

/// d f for a modified r-matrix R (arity of f up to dim - 1).
Cochain coboundary(const Endo &r, const Cochain &f);

struct Witness {
  Cochain cochain;
  /// For coboundaries, a cochain whose coboundary is `cochain`.
  std::optional<Cochain> preimage;
};

struct DegreeReport {
  std::size_t degree = 0; ///< cohomological degree n; arity n - 1
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_cohomology = 0;
  std::vector<Cochain> cocycle_basis;
  std::vector<Witness> coboundary_basis;
  /// Cocycles completing the coboundary basis to a basis of Z^n.
  std::vector<Cochain> cohomology_representatives;
};

struct CohomologyReport {
  std::vector<DegreeReport> degrees; ///< degrees 1 .. max_degree
  const DegreeReport &at(std::size_t degree) const { return degrees.at(degree - 1); }
};

struct CohomologyOptions {
  std::size_t max_degree = 3;
  /// Skip witness bases (dimensions only).
  bool witnesses = true;
};

/// Throws PreconditionError unless r is a modified r-matrix.
CohomologyReport cohomology(const Endo &r, CohomologyOptions options = {});

/// d f = 0. Throws PreconditionError unless r is a modified r-matrix.
bool is_cocycle(const Endo &r, const Cochain &f);

/// Some g with d g = f, or nullopt. Arity 0 cochains never have one, since C^0 = 0.
std::optional<Cochain> coboundary_preimage(const Endo &r, const Cochain &f);

} // namespace modr
