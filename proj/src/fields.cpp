#include "magspec/fields.hpp"

#include <array>
#include <cmath>

namespace magspec {

namespace {

// --- analytic path -------------------------------------------------------

SmoothFn det_contra(const CoefficientSet& c) { return c.g11 * c.g22 - c.g12 * c.g12; }

SmoothFn F_fn(const CoefficientSet& c) {
    return abs(c.A2.dx() - c.A1.dy()) * sqrt(det_contra(c));
}

// covariant components (E, F, G) of the curvature metric
struct CovMetric {
    SmoothFn E, Fm, G;
};

CovMetric cov_metric(const CoefficientSet& c, const SmoothFn& F, MetricConvention conv) {
    if (conv == MetricConvention::contravariant) {
        // contravariant tensor is F^{-1} g^{jk}; invert the 2x2
        SmoothFn p = c.g11 / F, q = c.g12 / F, r = c.g22 / F;
        SmoothFn det = p * r - q * q;
        return {r / det, SmoothFn() - q / det, p / det};
    }
    // F^{-1} g^{jk} read as the covariant tensor directly
    return {c.g11 / F, c.g12 / F, c.g22 / F};
}

SmoothFn det3(const std::array<std::array<SmoothFn, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SmoothFn brioschi(const CovMetric& g) {
    const SmoothFn half(0.5);
    SmoothFn Ex = g.E.dx(), Ey = g.E.dy(), Eyy = Ey.dy();
    SmoothFn Fx = g.Fm.dx(), Fy = g.Fm.dy(), Fxy = Fx.dy();
    SmoothFn Gx = g.G.dx(), Gy = g.G.dy(), Gxx = Gx.dx();

    std::array<std::array<SmoothFn, 3>, 3> m1 = {{
        {SmoothFn() - half * Eyy + Fxy - half * Gxx, half * Ex, Fx - half * Ey},
        {Fy - half * Gx, g.E, g.Fm},
        {half * Gy, g.Fm, g.G},
    }};
    std::array<std::array<SmoothFn, 3>, 3> m2 = {{
        {SmoothFn(), half * Ey, half * Gx},
        {half * Ey, g.E, g.Fm},
        {half * Gx, g.Fm, g.G},
    }};
    SmoothFn den = g.E * g.G - g.Fm * g.Fm;
    SmoothFn gauss = (det3(m1) - det3(m2)) / (den * den);
    return SmoothFn(2.0) * gauss; // scalar curvature = 2 x Gaussian
}

SmoothFn lb_fn(const CovMetric& g, const SmoothFn& u) {
    // L u = s^{-1} [ dx(s (G^11 u_x + G^12 u_y)) + dy(s (G^12 u_x + G^22 u_y)) ],
    // s = det(G_cov)^{1/2}, G^{jk} the inverse of the covariant tensor.
    SmoothFn det = g.E * g.G - g.Fm * g.Fm;
    SmoothFn s = sqrt(det);
    SmoothFn i11 = g.G / det, i12 = SmoothFn() - g.Fm / det, i22 = g.E / det;
    SmoothFn ux = u.dx(), uy = u.dy();
    SmoothFn w1 = s * (i11 * ux + i12 * uy);
    SmoothFn w2 = s * (i12 * ux + i22 * uy);
    return (w1.dx() + w2.dy()) / s;
}

// --- stencil path --------------------------------------------------------

using Arr = Eigen::ArrayXXd;

struct CovArrays {
    Arr E, Fm, G;
};

Arr F_array(const CoefficientSet& c) {
    const double a = c.grid.spacing();
    Arr F12 = stencil_derivative(c.A2_s.values(), a, 0) -
              stencil_derivative(c.A1_s.values(), a, 1);
    Arr det = c.g11_s.values() * c.g22_s.values() - c.g12_s.values() * c.g12_s.values();
    return F12.abs() * det.sqrt();
}

CovArrays cov_arrays(const CoefficientSet& c, const Arr& F, MetricConvention conv) {
    if (conv == MetricConvention::contravariant) {
        Arr p = c.g11_s.values() / F, q = c.g12_s.values() / F, r = c.g22_s.values() / F;
        Arr det = p * r - q * q;
        return {r / det, -q / det, p / det};
    }
    return {c.g11_s.values() / F, c.g12_s.values() / F, c.g22_s.values() / F};
}

Arr brioschi_arrays(const CovArrays& g, double a) {
    Arr Ex = stencil_derivative(g.E, a, 0), Ey = stencil_derivative(g.E, a, 1);
    Arr Eyy = stencil_derivative(Ey, a, 1);
    Arr Fx = stencil_derivative(g.Fm, a, 0), Fy = stencil_derivative(g.Fm, a, 1);
    Arr Fxy = stencil_derivative(Fx, a, 1);
    Arr Gx = stencil_derivative(g.G, a, 0), Gy = stencil_derivative(g.G, a, 1);
    Arr Gxx = stencil_derivative(Gx, a, 0);

    Arr a00 = -0.5 * Eyy + Fxy - 0.5 * Gxx;
    Arr a01 = 0.5 * Ex, a02 = Fx - 0.5 * Ey;
    Arr a10 = Fy - 0.5 * Gx, a20 = 0.5 * Gy;
    Arr den = g.E * g.G - g.Fm * g.Fm;

    Arr det1 = a00 * (g.E * g.G - g.Fm * g.Fm) - a01 * (a10 * g.G - g.Fm * a20) +
               a02 * (a10 * g.Fm - g.E * a20);
    Arr b01 = 0.5 * Ey, b02 = 0.5 * Gx;
    Arr det2 = -b01 * (b01 * g.G - g.Fm * b02) + b02 * (b01 * g.Fm - g.E * b02);
    return 2.0 * (det1 - det2) / (den * den);
}

Arr lb_arrays(const CovArrays& g, const Arr& u, double a) {
    Arr det = g.E * g.G - g.Fm * g.Fm;
    Arr s = det.sqrt();
    Arr i11 = g.G / det, i12 = -g.Fm / det, i22 = g.E / det;
    Arr ux = stencil_derivative(u, a, 0), uy = stencil_derivative(u, a, 1);
    Arr w1 = s * (i11 * ux + i12 * uy);
    Arr w2 = s * (i12 * ux + i22 * uy);
    return (stencil_derivative(w1, a, 0) + stencil_derivative(w2, a, 1)) / s;
}

} // namespace

ScalarField compute_F(const CoefficientSet& coeffs) {
    if (coeffs.analytic) return ScalarField::sample(coeffs.grid, F_fn(coeffs));
    return ScalarField(coeffs.grid, F_array(coeffs));
}

ScalarField compute_sqrt_g(const CoefficientSet& coeffs) {
    if (coeffs.analytic)
        return ScalarField::sample(coeffs.grid, SmoothFn(1.0) / sqrt(det_contra(coeffs)));
    Arr det = coeffs.g11_s.values() * coeffs.g22_s.values() -
              coeffs.g12_s.values() * coeffs.g12_s.values();
    return ScalarField(coeffs.grid, det.sqrt().inverse());
}

ScalarField scalar_curvature(const CoefficientSet& coeffs, MetricConvention conv) {
    if (coeffs.grid.nx < 8 || coeffs.grid.ny < 8)
        throw GuardError("scalar_curvature: grid too coarse (need nx, ny >= 8)");
    if (coeffs.analytic) {
        SmoothFn F = F_fn(coeffs);
        return ScalarField::sample(coeffs.grid, brioschi(cov_metric(coeffs, F, conv)));
    }
    Arr F = F_array(coeffs);
    return ScalarField(coeffs.grid,
                       brioschi_arrays(cov_arrays(coeffs, F, conv), coeffs.grid.spacing()));
}

ScalarField laplace_beltrami(const CoefficientSet& coeffs, const ScalarField& u,
                             MetricConvention conv) {
    if (coeffs.grid.nx < 8 || coeffs.grid.ny < 8)
        throw GuardError("laplace_beltrami: grid too coarse (need nx, ny >= 8)");
    if (coeffs.analytic && u.has_fn()) {
        SmoothFn F = F_fn(coeffs);
        return ScalarField::sample(coeffs.grid, lb_fn(cov_metric(coeffs, F, conv), u.fn()));
    }
    Arr F = coeffs.analytic ? ScalarField::sample(coeffs.grid, F_fn(coeffs)).values()
                            : F_array(coeffs);
    return ScalarField(coeffs.grid, lb_arrays(cov_arrays(coeffs, F, conv), u.values(),
                                              coeffs.grid.spacing()));
}

ScalarField compute_omega1(const CoefficientSet& coeffs, MetricConvention conv) {
    if (coeffs.analytic) {
        SmoothFn F = F_fn(coeffs);
        SmoothFn vf = coeffs.V / F;
        CovMetric g = cov_metric(coeffs, F, conv);
        SmoothFn kappa = brioschi(g);
        SmoothFn lb = lb_fn(g, vf);
        SmoothFn omega1 = SmoothFn(0.125) * kappa * vf * vf - SmoothFn(0.25) * vf * lb;
        return ScalarField::sample(coeffs.grid, omega1);
    }
    Arr F = F_array(coeffs);
    Arr vf = coeffs.V_s.values() / F;
    CovArrays g = cov_arrays(coeffs, F, conv);
    const double a = coeffs.grid.spacing();
    Arr kappa = brioschi_arrays(g, a);
    Arr lb = lb_arrays(g, vf, a);
    return ScalarField(coeffs.grid, 0.125 * kappa * vf * vf - 0.25 * vf * lb);
}

Geometry analyze_geometry(const CoefficientSet& coeffs, MetricConvention conv) {
    Geometry out;
    out.F = compute_F(coeffs);
    out.sqrt_g = compute_sqrt_g(coeffs);
    if (coeffs.analytic) {
        SmoothFn F = F_fn(coeffs);
        SmoothFn vf = coeffs.V / F;
        CovMetric g = cov_metric(coeffs, F, conv);
        SmoothFn kappa = brioschi(g);
        SmoothFn lb = lb_fn(g, vf);
        SmoothFn omega1 = SmoothFn(0.125) * kappa * vf * vf - SmoothFn(0.25) * vf * lb;
        out.vf = ScalarField::sample(coeffs.grid, vf);
        out.curvature = ScalarField::sample(coeffs.grid, kappa);
        out.lb_vf = ScalarField::sample(coeffs.grid, lb);
        out.omega1 = ScalarField::sample(coeffs.grid, omega1);
        return out;
    }
    Arr F = out.F.values();
    Arr vf = coeffs.V_s.values() / F;
    CovArrays g = cov_arrays(coeffs, F, conv);
    const double a = coeffs.grid.spacing();
    Arr kappa = brioschi_arrays(g, a);
    Arr lb = lb_arrays(g, vf, a);
    out.vf = ScalarField(coeffs.grid, vf);
    out.curvature = ScalarField(coeffs.grid, kappa);
    out.lb_vf = ScalarField(coeffs.grid, lb);
    out.omega1 = ScalarField(coeffs.grid, 0.125 * kappa * vf * vf - 0.25 * vf * lb);
    return out;
}

} // namespace magspec
