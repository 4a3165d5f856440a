#pragma once

#include "modr/liealg.hpp"
#include "modr/rmatrix.hpp"

#include <optional>
#include <vector>

namespace modr {

/// g + g with the blockwise bracket; coordinates (x, y) are x_0..x_{n-1}, y_0..y_{n-1}.
struct DoubledAlgebra {
  LieAlgebra base;
  LieAlgebra underlying;

  Vector embed_first(const Vector &x) const;
  Vector embed_second(const Vector &y) const;
  Vector pair(const Vector &x, const Vector &y) const;
  /// Basis {(e_i, e_i)} of the diagonal.
  std::vector<Vector> diagonal() const;
  /// Basis {(e_i, -e_i)} of the antidiagonal.
  std::vector<Vector> antidiagonal() const;
};

DoubledAlgebra build_double(const LieAlgebra &algebra);

struct SubspaceCert {
  std::vector<Vector> basis;
  bool is_subalgebra = false;
  std::optional<BasisPair> failing_pair;
};

SubspaceCert subspace_cert(const LieAlgebra &algebra, std::vector<Vector> basis);

struct GraphCert {
  DoubledAlgebra doubled;
  /// Graph {(x - Rx, -x - Rx)} with basis from e_i.
  SubspaceCert graph;
  bool mcybe = false; ///< independent verdict from the defect
  bool agree() const { return graph.is_subalgebra == mcybe; }
};

/// Any R; the subalgebra test is the criterion.
GraphCert graph_complement(const Endo &r);

struct ComplementCert {
  SubspaceCert diagonal;
  SubspaceCert graph;
  std::size_t stacked_rank = 0; ///< rank of diagonal and graph bases together
  std::size_t total_dim = 0;    ///< 2n
  bool direct_sum() const { return stacked_rank == total_dim; }
  bool passes() const { return direct_sum() && diagonal.is_subalgebra && graph.is_subalgebra; }
};

/// Throws PreconditionError unless R is a modified r-matrix.
ComplementCert complement_certificate(const Endo &r);

/// complement_certificate(R + t Rhat) for each t. Throws PreconditionError
/// unless R + t Rhat is a linear deformation.
std::vector<ComplementCert> deformed_complements(const Endo &r, const Endo &rhat,
                                                 const std::vector<Rational> &t_values);

} // namespace modr
