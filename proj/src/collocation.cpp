#include "wavebvp/collocation.hpp"

#include <stdexcept>

namespace wavebvp {

Grid collocation_points(int count) {
    if (count < 1) throw std::domain_error("collocation grid needs at least one point");
    Grid grid;
    grid.count = count;
    grid.points.resize(count);
    for (int l = 0; l < count; ++l) grid.points[l] = (l + 0.5) / count;
    return grid;
}

}  // namespace wavebvp
