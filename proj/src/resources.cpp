#include "reconf/resources.hpp"

#include <stdexcept>

namespace reconf {

void ResourceMatrix::validate() const {
    if (threshold < 1)
        throw std::invalid_argument("ResourceMatrix: threshold must be >= 1");
    if (gamma.rows() < 1 || gamma.cols() < 1)
        throw std::invalid_argument("ResourceMatrix: empty matrix");
    for (Eigen::Index i = 0; i < gamma.rows(); ++i)
        for (Eigen::Index j = 0; j < gamma.cols(); ++j)
            if (gamma(i, j) != 0 && gamma(i, j) != 1)
                throw std::invalid_argument(
                    "ResourceMatrix: entries must be 0 or 1");
}

bool resource_feasible(const ResourceMatrix& resources) {
    const Eigen::VectorXi sums = resources.gamma.colwise().sum();
    return (sums.array() >= resources.threshold).all();
}

}  // namespace reconf
