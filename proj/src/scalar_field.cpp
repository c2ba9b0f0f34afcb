#include "magspec/scalar_field.hpp"

#include <cmath>

namespace magspec {

ScalarField::ScalarField(Grid2D grid, Eigen::ArrayXXd values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.rows() != grid_.nx || values_.cols() != grid_.ny)
        throw ValidationError("ScalarField: value array does not match grid");
    check_finite();
}

ScalarField::ScalarField(Grid2D grid, Eigen::ArrayXXd values, SmoothFn fn)
    : grid_(grid), values_(std::move(values)), fn_(std::move(fn)) {
    if (values_.rows() != grid_.nx || values_.cols() != grid_.ny)
        throw ValidationError("ScalarField: value array does not match grid");
    check_finite();
}

void ScalarField::check_finite() const {
    if (!values_.isFinite().all())
        throw ValidationError("ScalarField: non-finite value in samples");
}

ScalarField ScalarField::sample(const Grid2D& grid, const SmoothFn& fn) {
    Eigen::ArrayXXd v(grid.nx, grid.ny);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) v(i, j) = fn(grid.x(i), grid.y(j));
    return ScalarField(grid, std::move(v), fn);
}

ScalarField ScalarField::constant(const Grid2D& grid, double c) {
    return ScalarField(grid, Eigen::ArrayXXd::Constant(grid.nx, grid.ny, c), SmoothFn(c));
}

double ScalarField::operator()(double x, double y) const {
    if (fn_) return (*fn_)(x, y);
    // bilinear on the cell containing (x,y), clamped to the grid
    const double a = grid_.spacing();
    double fx = (x - grid_.x_min) / a, fy = (y - grid_.y_min) / a;
    int i = std::clamp(static_cast<int>(std::floor(fx)), 0, grid_.nx - 2);
    int j = std::clamp(static_cast<int>(std::floor(fy)), 0, grid_.ny - 2);
    double tx = std::clamp(fx - i, 0.0, 1.0), ty = std::clamp(fy - j, 0.0, 1.0);
    return (1 - tx) * (1 - ty) * values_(i, j) + tx * (1 - ty) * values_(i + 1, j) +
           (1 - tx) * ty * values_(i, j + 1) + tx * ty * values_(i + 1, j + 1);
}

double ScalarField::callback_residual() const {
    if (!fn_) return 0.0;
    double r = 0.0;
    for (int i = 0; i < grid_.nx; ++i)
        for (int j = 0; j < grid_.ny; ++j)
            r = std::max(r, std::abs((*fn_)(grid_.x(i), grid_.y(j)) - values_(i, j)));
    return r;
}

namespace {

// centered 4th-order interior; one-sided 4th-order at rows 0,1 and n-2,n-1
double stencil_1d(const double* f, int n, int i, double inv12a) {
    if (i >= 2 && i <= n - 3)
        return (-f[i + 2] + 8 * f[i + 1] - 8 * f[i - 1] + f[i - 2]) * inv12a;
    if (i == 0) return (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]) * inv12a;
    if (i == 1) return (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) * inv12a;
    if (i == n - 2)
        return (3 * f[n - 1] + 10 * f[n - 2] - 18 * f[n - 3] + 6 * f[n - 4] - f[n - 5]) * inv12a;
    return (25 * f[n - 1] - 48 * f[n - 2] + 36 * f[n - 3] - 16 * f[n - 4] + 3 * f[n - 5]) *
           inv12a;
}

} // namespace

Eigen::ArrayXXd stencil_derivative(const Eigen::ArrayXXd& v, double spacing, int axis) {
    const int nx = static_cast<int>(v.rows()), ny = static_cast<int>(v.cols());
    if ((axis == 0 ? nx : ny) < 8)
        throw GuardError("stencil_derivative: grid too coarse for 4th-order stencil (need >= 8)");
    const double inv12a = 1.0 / (12.0 * spacing);
    Eigen::ArrayXXd d(nx, ny);
    if (axis == 0) {
        std::vector<double> col(nx);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) col[i] = v(i, j);
            for (int i = 0; i < nx; ++i) d(i, j) = stencil_1d(col.data(), nx, i, inv12a);
        }
    } else {
        std::vector<double> row(ny);
        for (int i = 0; i < nx; ++i) {
            for (int j = 0; j < ny; ++j) row[j] = v(i, j);
            for (int j = 0; j < ny; ++j) d(i, j) = stencil_1d(row.data(), ny, j, inv12a);
        }
    }
    return d;
}

ScalarField ScalarField::dx() const {
    if (fn_) return ScalarField::sample(grid_, fn_->dx());
    return ScalarField(grid_, stencil_derivative(values_, grid_.spacing(), 0));
}

ScalarField ScalarField::dy() const {
    if (fn_) return ScalarField::sample(grid_, fn_->dy());
    return ScalarField(grid_, stencil_derivative(values_, grid_.spacing(), 1));
}

} // namespace magspec
