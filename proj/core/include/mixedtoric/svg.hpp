#ifndef MIXEDTORIC_SVG_HPP
#define MIXEDTORIC_SVG_HPP

#include <string>

#include "mixedtoric/fan.hpp"
#include "mixedtoric/newton.hpp"

namespace mixedtoric {

/// Newton polygon: lattice grid, support dots, hull chain, edge normals.
std::string newton_svg(const NewtonPolyhedron& np);

/// Fan diagram: rays from the origin with labels, cone shading.
std::string fan_svg(const Fan2& fan);

}  // namespace mixedtoric

#endif
