#include "reconf/configuration.hpp"

#include <stdexcept>

namespace reconf {

void Configuration::validate() const {
    resources.validate();
    if (resources.robots() != topology.n())
        throw std::invalid_argument(
            "Configuration: resource rows disagree with vertex count");
    if (distances.n() != topology.n())
        throw std::invalid_argument(
            "Configuration: distance matrix size disagrees with vertex count");
    if (distances.finite_pairs() != topology.edges())
        throw std::invalid_argument(
            "Configuration: finite distance pattern must equal the edge set");
}

}  // namespace reconf
