#ifndef MAGSPEC_CRITICAL_POINTS_HPP
#define MAGSPEC_CRITICAL_POINTS_HPP

#include <Eigen/Core>
#include <vector>

#include "magspec/fields.hpp"

namespace magspec {

enum class CritKind { minimum, maximum, saddle, none };

const char* to_string(CritKind k);

/**
 * A refined critical point of V/F with the local data the correction terms
 * need. `k` is |det Hess(V/F)|^{1/2}. Points that converged within
 * dedup_radius of the search boundary are kept but flagged unreliable and
 * excluded from correction sums.
 */
struct CriticalPoint {
    Eigen::Vector2d location{0, 0};
    CritKind kind = CritKind::none;
    Eigen::Matrix2d hessian = Eigen::Matrix2d::Zero(); // of V/F
    double k = 0.0;
    double grad_norm = 0.0;
    double vf_value = 0.0;
    double omega1_value = 0.0;
    double sqrt_g_value = 0.0;
    double F_value = 0.0;
    double V_value = 0.0;
    double curvature_value = 0.0;
    bool boundary_unreliable = false;
};

struct CritOptions {
    double newton_tol = 1e-10;  // on |grad(V/F)|
    double nondeg_tol = 1e-6;   // on |det Hess|
    double dedup_radius = 1e-4;
    int max_iter = 50;
};

/**
 * Locate all critical points of V/F inside the disc of `search_radius`.
 * Seeds come from grid cells whose corners change sign in both components of
 * grad(V/F); each seed is refined by Newton iteration on the gradient.
 * Non-convergent seeds are dropped (with a note in `warnings` when given);
 * a converged point with |det Hess| < nondeg_tol is a hard error.
 */
std::vector<CriticalPoint> find_critical_points(const CoefficientSet& coeffs,
                                                double search_radius,
                                                const CritOptions& opt = {},
                                                std::vector<std::string>* warnings = nullptr);

/// Local data at a given location, no Newton refinement. kind == none when
/// the gradient does not vanish within newton_tol.
CriticalPoint hessian_data(const CoefficientSet& coeffs, const Eigen::Vector2d& location,
                           const CritOptions& opt = {});

} // namespace magspec

#endif
