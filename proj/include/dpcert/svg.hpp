#pragma once

#include "dpcert/newton.hpp"
#include "dpcert/regions.hpp"

#include <string>
#include <vector>

namespace dpcert {

// Pieces drawn at a fixed m with their lattice points, the diagonal s = t
// and vertex labels.
std::string region_svg(const std::vector<RegionSpec> &pieces, long m, const std::string &title);

// Support of f, the lower-left boundary and the diagonal.
std::string newton_svg(const BiPoly &f, const std::string &title);

} // namespace dpcert
