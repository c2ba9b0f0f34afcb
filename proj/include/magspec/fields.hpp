#ifndef MAGSPEC_FIELDS_HPP
#define MAGSPEC_FIELDS_HPP

#include "magspec/coefficients.hpp"

namespace magspec {

/// Reading of "the metric F^{-1} g^{jk}" used for curvature and the
/// Laplace-Beltrami operator: scale the contravariant tensor (default), or
/// treat F^{-1} g^{jk} as the covariant tensor itself.
enum class MetricConvention { contravariant, covariant };

/// Magnetic field intensity F = |d1 A2 - d2 A1| * det(g^{jk})^{1/2}.
ScalarField compute_F(const CoefficientSet& coeffs);

/// Riemannian area density sqrt(g) = det(g^{jk})^{-1/2}.
ScalarField compute_sqrt_g(const CoefficientSet& coeffs);

/// Scalar curvature (twice the Gaussian curvature) of the 2-D metric built
/// from F^{-1} g^{jk}, via the Brioschi formula.
ScalarField scalar_curvature(const CoefficientSet& coeffs,
                             MetricConvention conv = MetricConvention::contravariant);

/// Laplace-Beltrami operator of that metric applied to u.
ScalarField laplace_beltrami(const CoefficientSet& coeffs, const ScalarField& u,
                             MetricConvention conv = MetricConvention::contravariant);

/// omega1 = (1/8) kappa (V/F)^2 - (1/4)(V/F) L(V/F).
ScalarField compute_omega1(const CoefficientSet& coeffs,
                           MetricConvention conv = MetricConvention::contravariant);

/**
 * All derived geometric quantities of one coefficient set, sampled once.
 * Each field keeps its analytic callback when the coefficients are analytic,
 * so downstream consumers can evaluate off-grid (e.g. at critical points).
 */
struct Geometry {
    ScalarField F;
    ScalarField sqrt_g;
    ScalarField vf;        // V/F
    ScalarField curvature; // kappa
    ScalarField lb_vf;     // L(V/F)
    ScalarField omega1;
};

Geometry analyze_geometry(const CoefficientSet& coeffs,
                          MetricConvention conv = MetricConvention::contravariant);

} // namespace magspec

#endif
