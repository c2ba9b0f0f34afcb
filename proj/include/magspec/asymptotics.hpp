#ifndef MAGSPEC_ASYMPTOTICS_HPP
#define MAGSPEC_ASYMPTOTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "magspec/critical_points.hpp"

namespace magspec {

enum class Regime { weak_i, intermediate_ii, intermediate_corr2, superstrong };

const char* to_string(Regime r);

/**
 * The (mu, h) point plus the regime-boundary constants. The paper-style
 * boundaries are mu <= C_i h^{-1/3} (weak), mu <= C_ii h^{-1} (intermediate),
 * mu >= C_log (h |log10 h|)^{-1} (second correction active) and
 * mu h >= eps_ss (superstrong). kappa2 and varsigma have no closed form and
 * are per-scenario configuration values.
 */
struct RegimeParams {
    double mu = 1.0;
    double h = 0.1;
    double C_i = 1.0;
    double C_ii = 1.0;
    double C_log = 1.0;
    double eps_ss = 1.0;
    double mu3h_min = 2.0; // saddle corrections activate when mu^3 h >= this
    std::optional<double> kappa2;
    std::optional<SmoothFn> varsigma;

    RegimeParams() = default;
    RegimeParams(double mu_, double h_);
    void validate() const;
};

struct SigmaGap {
    double sigma = 0.0;
    int nbar = 0;
};

/// Distance from the spectral level to the nearest Landau level:
/// min over n >= 0 of |V - (2n+1) F mu h|, ties to the smaller n.
SigmaGap sigma_gap(double V_val, double F_val, double mu, double h);

/// Number of Landau levels at or below the level: #{n >= 0 : (2n+1) mu h F <= V + 2 tau}.
int landau_level_count(double V_val, double F_val, double mu, double h, double tau);

/// Local density of the magnetic Weyl expression,
/// (2 pi)^{-1} mu h^{-1} F sqrt(g) x (admissible level count).
double magnetic_weyl_density(const CoefficientSet& coeffs, const Geometry& geo, double x,
                             double y, double tau, double mu, double h);

/// Composite-Simpson quadrature of the Weyl density against psi.
double integrate_weyl(const CoefficientSet& coeffs, const Geometry& geo,
                      const ScalarField& psi, double tau, double mu, double h);

/// Simpson quadrature of f * psi over the grid (shared by the varsigma hook).
double integrate_against_psi(const ScalarField& f, const ScalarField& psi);

/// Correction coefficient at a saddle:
/// varkappa = -(4 pi)^{-1} ((1/8) kappa V^2 / F - (1/4) V L(V/F)) |det Hess|^{-1/2} sqrt(g)
///          = -(4 pi)^{-1} F omega1 k^{-1} sqrt(g).
double varkappa_coeff(const CriticalPoint& cp);

struct CorrResult {
    double value = 0.0;
    bool below_threshold = false; // mu^3 h < activation
};

/// Saddle correction mu^{-1} h^{-1} varkappa log((sigma + mu^{-2})(1 + mu^{-1} h^{-1})).
CorrResult corr_term(const CriticalPoint& cp, const RegimeParams& rp);

/// Second correction kappa2 mu h log((sigma + h^2)(1 + mu^{-1} h^{-1})).
/// `active` should come from the regime classification.
double corr2_term(const CriticalPoint& cp, const RegimeParams& rp, bool active);

/// Boundary ties resolve to the lower regime.
Regime classify_regime(const RegimeParams& rp);

struct SaddleCorrection {
    CriticalPoint cp;
    double sigma = 0.0; // Eq-(8) form |V - (2 nbar + 1) F mu h| at the point
    double w = 0.0;     // V/F form  -V/F + (2 nbar + 1) mu h
    int nbar = 0;
    double psi_value = 0.0;
    double corr = 0.0;  // corr_term * psi
    double corr2 = 0.0; // corr2_term * psi
    bool below_threshold = false;
};

struct Prediction {
    double weyl_integral = 0.0;
    std::vector<SaddleCorrection> saddle_corrections;
    Regime regime = Regime::weak_i;
    double varsigma_term = 0.0;
    double total = 0.0;
    Eigen::ArrayXXi nbar_field; // minimizing Landau index per node

    double corr_sum() const;
    double corr2_sum() const;
};

/// Assemble the full asymptotic prediction at tau = 0.
Prediction predict(const CoefficientSet& coeffs, const Geometry& geo, const ScalarField& psi,
                   const RegimeParams& rp, const std::vector<CriticalPoint>& points);

/// Composite Simpson weights for n nodes with spacing a (3/8 closure when
/// the panel count is odd).
std::vector<double> simpson_weights(int n, double a);

} // namespace magspec

#endif
