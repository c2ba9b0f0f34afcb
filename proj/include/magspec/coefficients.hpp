#ifndef MAGSPEC_COEFFICIENTS_HPP
#define MAGSPEC_COEFFICIENTS_HPP

#include "magspec/scalar_field.hpp"

namespace magspec {

/**
 * The coefficient fields of the operator: inverse-metric components g^{jk}
 * (symmetric positive definite), magnetic potential (A1, A2), electric
 * potential V, and the ellipticity floor epsilon0. Fields are sampled once
 * on the grid and also carried as analytic callbacks when available.
 */
struct CoefficientSet {
    Grid2D grid;

    SmoothFn g11, g12, g22;
    SmoothFn A1, A2;
    SmoothFn V;

    /// false: callbacks are untrusted and derived quantities must use
    /// grid stencils on the samples.
    bool analytic = true;

    double epsilon0 = 0.05;
    /// Theorem-2 style scenario: V is a Landau-level offset form, the
    /// V >= epsilon0 condition is not enforced.
    bool theorem2_mode = false;

    ScalarField g11_s, g12_s, g22_s, A1_s, A2_s, V_s;

    static CoefficientSet make(Grid2D grid, SmoothFn g11, SmoothFn g12, SmoothFn g22,
                               SmoothFn A1, SmoothFn A2, SmoothFn V, double epsilon0,
                               bool theorem2_mode = false);

    /// Sample-only construction; derived operations take the stencil path.
    static CoefficientSet from_samples(Grid2D grid, Eigen::ArrayXXd g11, Eigen::ArrayXXd g12,
                                       Eigen::ArrayXXd g22, Eigen::ArrayXXd A1,
                                       Eigen::ArrayXXd A2, Eigen::ArrayXXd V, double epsilon0,
                                       bool theorem2_mode = false);

    /// Smallest eigenvalue of (g^{jk}) over the grid.
    double metric_min_eigenvalue() const;

    /// Enforce the pointwise conditions: metric positive definite, and
    /// V >= epsilon0 unless theorem2_mode. (The F >= epsilon0 condition is
    /// checked by compute_F's caller, where F exists.)
    void validate() const;
};

} // namespace magspec

#endif
