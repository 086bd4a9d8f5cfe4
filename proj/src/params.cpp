#include "reconf/params.hpp"

#include <stdexcept>

namespace reconf {

void GeometryParams::validate() const {
    if (!(0 < d_s && d_s < d_mc))
        throw std::invalid_argument("GeometryParams: need 0 < d_s < d_mc");
    if (!(0 < c_min && c_min < c_max))
        throw std::invalid_argument("GeometryParams: need 0 < c_min < c_max");
    if (ne < 2 || ne % 2 != 0)
        throw std::invalid_argument("GeometryParams: ne must be even and >= 2");
    if (!(box_min.array() < box_max.array()).all())
        throw std::invalid_argument(
            "GeometryParams: box_min must be elementwise below box_max");
}

}  // namespace reconf
