#ifndef MAGSPEC_AREA2D_HPP
#define MAGSPEC_AREA2D_HPP

#include <functional>

namespace magspec {

struct AreaResult {
    double area = 0.0;
    long cells = 0;   // leaf cells visited
    int max_depth = 0;
};

/**
 * Area of {(x,xi): |x| + |xi| <= rho, f(x,xi) <= level} by adaptive quadtree
 * subdivision. The diamond boundary is handled exactly by polygon clipping;
 * the level set is located by linear interpolation within each leaf cell,
 * cells are refined while parent and child estimates disagree beyond the
 * locally allotted share of `tol` (absolute area).
 */
AreaResult sublevel_area_in_diamond(const std::function<double(double, double)>& f,
                                    double level, double rho, double tol = 1e-9);

} // namespace magspec

#endif
