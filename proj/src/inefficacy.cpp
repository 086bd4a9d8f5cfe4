#include "reconf/inefficacy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace reconf {

double nuclear_norm(const Eigen::MatrixXd& m) {
    if (!m.allFinite())
        throw std::invalid_argument("nuclear_norm: non-finite entries");
    // Gram matrix on the smaller side keeps the eigenproblem tiny.
    const Eigen::MatrixXd gram = m.rows() >= m.cols()
                                     ? Eigen::MatrixXd(m.transpose() * m)
                                     : Eigen::MatrixXd(m * m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram,
                                                       Eigen::EigenvaluesOnly);
    // Eigenvalues of the Gram matrix within round-off of zero are zero; the
    // square root would otherwise blow the noise up by many orders of
    // magnitude (sqrt(1e-14) is 1e-7).
    const double largest = eig.eigenvalues().size() > 0
                               ? eig.eigenvalues().maxCoeff()
                               : 0.0;
    const double noise_floor = largest *
                               static_cast<double>(gram.rows()) * 16.0 *
                               std::numeric_limits<double>::epsilon();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const double lambda = eig.eigenvalues()(i);
        if (lambda > noise_floor) sum += std::sqrt(lambda);
    }
    return sum;
}

Eigen::MatrixXi inefficacy_matrix(const Topology& topology,
                                  const ResourceMatrix& resources) {
    const int n = topology.n();
    if (resources.robots() != n)
        throw std::invalid_argument(
            "inefficacy_matrix: dimension mismatch between topology and "
            "resources");
    const Eigen::MatrixXi coverage = closed_adjacency(topology) * resources.gamma;
    return Eigen::MatrixXi::Constant(n, resources.resource_kinds(), n) -
           coverage;
}

double task_inefficacy(const Topology& topology,
                       const ResourceMatrix& resources) {
    return nuclear_norm(inefficacy_matrix(topology, resources).cast<double>());
}

}  // namespace reconf
