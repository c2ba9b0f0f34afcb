#ifndef MAGSPEC_SCALAR_FIELD_HPP
#define MAGSPEC_SCALAR_FIELD_HPP

#include <Eigen/Core>
#include <optional>

#include "magspec/grid.hpp"
#include "magspec/smooth_fn.hpp"

namespace magspec {

/**
 * A real scalar field: values sampled on a Grid2D, optionally backed by an
 * analytic callback that agrees with the samples at the nodes. Derivative
 * methods use the callback when present, otherwise centered 4th-order
 * stencils with one-sided 4th-order closures at the boundary.
 */
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(Grid2D grid, Eigen::ArrayXXd values);
    ScalarField(Grid2D grid, Eigen::ArrayXXd values, SmoothFn fn);

    static ScalarField sample(const Grid2D& grid, const SmoothFn& fn);
    static ScalarField constant(const Grid2D& grid, double c);

    const Grid2D& grid() const { return grid_; }
    const Eigen::ArrayXXd& values() const { return values_; }
    double value(int i, int j) const { return values_(i, j); }

    bool has_fn() const { return fn_.has_value(); }
    const SmoothFn& fn() const { return *fn_; }

    /// Evaluate anywhere: analytic callback if present, else bilinear.
    double operator()(double x, double y) const;

    ScalarField dx() const;
    ScalarField dy() const;

    double min() const { return values_.minCoeff(); }
    double max() const { return values_.maxCoeff(); }

    /// Max |fn - samples| over nodes; 0 when no callback.
    double callback_residual() const;

private:
    Grid2D grid_;
    Eigen::ArrayXXd values_; // (nx, ny)
    std::optional<SmoothFn> fn_;
    void check_finite() const;
};

/// 4th-order first derivative of a sampled array along the given axis.
Eigen::ArrayXXd stencil_derivative(const Eigen::ArrayXXd& v, double spacing, int axis);

} // namespace magspec

#endif
