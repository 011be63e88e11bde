#pragma once

#include <vector>

namespace wavebvp {

/// Collocation mesh: midpoints of the uniform partition of [0,1] into
/// `count` cells. All points lie strictly inside (0,1), which keeps the
/// singular coefficient k/t finite.
struct Grid {
    int count = 0;
    std::vector<double> points;
};

/// Midpoint grid with count >= 1 points: points[l] = (l + 0.5) / count.
Grid collocation_points(int count);

}  // namespace wavebvp
