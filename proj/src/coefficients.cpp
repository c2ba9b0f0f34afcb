#include "magspec/coefficients.hpp"

#include <cmath>
#include <string>

namespace magspec {

CoefficientSet CoefficientSet::make(Grid2D grid, SmoothFn g11, SmoothFn g12, SmoothFn g22,
                                    SmoothFn A1, SmoothFn A2, SmoothFn V, double epsilon0,
                                    bool theorem2_mode) {
    CoefficientSet c;
    c.grid = grid;
    c.g11 = g11;
    c.g12 = g12;
    c.g22 = g22;
    c.A1 = A1;
    c.A2 = A2;
    c.V = V;
    c.analytic = true;
    c.epsilon0 = epsilon0;
    c.theorem2_mode = theorem2_mode;
    c.g11_s = ScalarField::sample(grid, g11);
    c.g12_s = ScalarField::sample(grid, g12);
    c.g22_s = ScalarField::sample(grid, g22);
    c.A1_s = ScalarField::sample(grid, A1);
    c.A2_s = ScalarField::sample(grid, A2);
    c.V_s = ScalarField::sample(grid, V);
    c.validate();
    return c;
}

CoefficientSet CoefficientSet::from_samples(Grid2D grid, Eigen::ArrayXXd g11,
                                            Eigen::ArrayXXd g12, Eigen::ArrayXXd g22,
                                            Eigen::ArrayXXd A1, Eigen::ArrayXXd A2,
                                            Eigen::ArrayXXd V, double epsilon0,
                                            bool theorem2_mode) {
    CoefficientSet c;
    c.grid = grid;
    c.analytic = false;
    c.epsilon0 = epsilon0;
    c.theorem2_mode = theorem2_mode;
    c.g11_s = ScalarField(grid, std::move(g11));
    c.g12_s = ScalarField(grid, std::move(g12));
    c.g22_s = ScalarField(grid, std::move(g22));
    c.A1_s = ScalarField(grid, std::move(A1));
    c.A2_s = ScalarField(grid, std::move(A2));
    c.V_s = ScalarField(grid, std::move(V));
    c.validate();
    return c;
}

double CoefficientSet::metric_min_eigenvalue() const {
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            const double p = g11_s.value(i, j), q = g12_s.value(i, j), r = g22_s.value(i, j);
            const double mean = 0.5 * (p + r);
            const double rad = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
            lo = std::min(lo, mean - rad);
        }
    return lo;
}

void CoefficientSet::validate() const {
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            const double p = g11_s.value(i, j), q = g12_s.value(i, j), r = g22_s.value(i, j);
            if (!(p > 0.0) || !(p * r - q * q > 0.0))
                throw ValidationError("metric (g^{jk}) not positive definite at node (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (!theorem2_mode) {
        const double vmin = V_s.min();
        if (vmin < epsilon0)
            throw ValidationError("condition V >= epsilon0 violated: min V = " +
                                  std::to_string(vmin) + " < " + std::to_string(epsilon0));
    }
}

} // namespace magspec
