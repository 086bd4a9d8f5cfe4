#pragma once

#include <Eigen/Dense>

#include "reconf/resources.hpp"
#include "reconf/topology.hpp"

namespace reconf {

/// Sum of singular values. Computed from the symmetric eigendecomposition of
/// the smaller Gram matrix; eigenvalues are clamped at zero before the square
/// roots to absorb round-off. Throws on non-finite entries.
double nuclear_norm(const Eigen::MatrixXd& m);

/// V = n * 1^{n x r} - closed_adjacency * gamma. Entry (i,j) counts how many
/// of the n robots are missing from robot i's closed neighborhood when
/// looking for resource j; all entries are integers in [0, n].
Eigen::MatrixXi inefficacy_matrix(const Topology& topology,
                                  const ResourceMatrix& resources);

/// Nuclear norm of the inefficacy matrix; zero exactly on the maximal
/// configuration (complete graph, every resource everywhere).
double task_inefficacy(const Topology& topology,
                       const ResourceMatrix& resources);

}  // namespace reconf
