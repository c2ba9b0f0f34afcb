#ifndef MAGSPEC_GRID_HPP
#define MAGSPEC_GRID_HPP

#include <cmath>
#include <string>

#include "magspec/errors.hpp"

namespace magspec {

/**
 * Uniform tensor grid on a closed square. Node (i,j) sits at
 * (x_min + i*spacing, y_min + j*spacing); spacing is identical in both axes.
 */
struct Grid2D {
    int nx = 0, ny = 0;
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_)
        : nx(nx_), ny(ny_), x_min(x_min_), x_max(x_max_), y_min(y_min_), y_max(y_max_) {
        if (nx < 8 || ny < 8)
            throw ValidationError("Grid2D: need nx, ny >= 8, got " + std::to_string(nx) +
                                  "x" + std::to_string(ny));
        const double ax = (x_max - x_min) / (nx - 1);
        const double ay = (y_max - y_min) / (ny - 1);
        if (!(ax > 0.0) || std::abs(ax - ay) > 1e-12 * std::abs(ax))
            throw ValidationError("Grid2D: spacing must be uniform and equal in both axes");
    }

    /// Square [-L,L]^2 with n nodes per axis.
    static Grid2D square(int n, double L = 1.0) { return Grid2D(n, n, -L, L, -L, L); }

    double spacing() const { return (x_max - x_min) / (nx - 1); }
    double x(int i) const { return x_min + i * spacing(); }
    double y(int j) const { return y_min + j * spacing(); }
    int size() const { return nx * ny; }

    bool contains(double px, double py) const {
        return px >= x_min && px <= x_max && py >= y_min && py <= y_max;
    }
    /// Strictly inside by `margin` nodes.
    bool interior(double px, double py, int margin = 1) const {
        const double m = margin * spacing();
        return px >= x_min + m && px <= x_max - m && py >= y_min + m && py <= y_max - m;
    }

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && x_min == o.x_min && x_max == o.x_max &&
               y_min == o.y_min && y_max == o.y_max;
    }
};

} // namespace magspec

#endif
