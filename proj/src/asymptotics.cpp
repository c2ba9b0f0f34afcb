#include "magspec/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace magspec {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::weak_i: return "weak(i)";
        case Regime::intermediate_ii: return "intermediate(ii)";
        case Regime::intermediate_corr2: return "intermediate-with-corr2";
        default: return "superstrong";
    }
}

RegimeParams::RegimeParams(double mu_, double h_) : mu(mu_), h(h_) { validate(); }

void RegimeParams::validate() const {
    if (!(mu >= 1.0)) throw ValidationError("RegimeParams: require mu >= 1");
    if (!(h > 0.0 && h <= 0.5)) throw ValidationError("RegimeParams: require 0 < h <= 0.5");
    if (!(C_i > 0 && C_ii > 0 && C_log > 0 && eps_ss > 0 && mu3h_min > 0))
        throw ValidationError("RegimeParams: all regime constants must be positive");
}

SigmaGap sigma_gap(double V_val, double F_val, double mu, double h) {
    const double step = F_val * mu * h; // levels at (2n+1) step, spacing 2 step
    const double t = (V_val / step - 1.0) / 2.0;
    int n = std::max(0, static_cast<int>(std::floor(t)));
    SigmaGap best{std::abs(V_val - (2.0 * n + 1.0) * step), n};
    const double up = std::abs(V_val - (2.0 * (n + 1) + 1.0) * step);
    if (up < best.sigma) best = {up, n + 1}; // strict: ties stay at the smaller n
    return best;
}

int landau_level_count(double V_val, double F_val, double mu, double h, double tau) {
    const double lam = (V_val + 2.0 * tau) / (mu * h * F_val);
    if (lam < 1.0) return 0;
    return static_cast<int>(std::floor((lam - 1.0) / 2.0)) + 1;
}

double magnetic_weyl_density(const CoefficientSet& coeffs, const Geometry& geo, double x,
                             double y, double tau, double mu, double h) {
    const double F = geo.F(x, y);
    const double sg = geo.sqrt_g(x, y);
    const double V = coeffs.analytic ? coeffs.V(x, y) : coeffs.V_s(x, y);
    const int count = landau_level_count(V, F, mu, h, tau);
    return mu / (2.0 * std::numbers::pi * h) * F * sg * count;
}

std::vector<double> simpson_weights(int n, double a) {
    std::vector<double> w(n, 0.0);
    const int panels = n - 1;
    if (panels < 3) throw ValidationError("simpson_weights: need at least 4 nodes");
    if (panels % 2 == 0) {
        w[0] = w[n - 1] = 1.0 / 3;
        for (int i = 1; i < n - 1; i += 2) w[i] = 4.0 / 3;
        for (int i = 2; i < n - 1; i += 2) w[i] = 2.0 / 3;
    } else {
        // Simpson on the first n-4 panels, 3/8 rule on the last three
        const int m = n - 3;
        std::vector<double> head = simpson_weights(m, 1.0);
        for (int i = 0; i < m; ++i) w[i] = head[i];
        w[m - 1] += 3.0 / 8;
        w[m] = 9.0 / 8;
        w[m + 1] = 9.0 / 8;
        w[m + 2] = 3.0 / 8;
    }
    for (double& v : w) v *= a;
    return w;
}

namespace {

void check_psi_support(const ScalarField& psi) {
    const Grid2D& g = psi.grid();
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            const bool edge = i < 2 || j < 2 || i >= g.nx - 2 || j >= g.ny - 2;
            if (edge && psi.value(i, j) != 0.0)
                throw ValidationError("integrate_weyl: psi support touches the grid boundary");
        }
}

} // namespace

double integrate_against_psi(const ScalarField& f, const ScalarField& psi) {
    if (!(f.grid() == psi.grid()))
        throw ValidationError("integrate_against_psi: psi grid mismatch");
    check_psi_support(psi);
    const Grid2D& g = psi.grid();
    const std::vector<double> wx = simpson_weights(g.nx, g.spacing());
    const std::vector<double> wy = simpson_weights(g.ny, g.spacing());
    double acc = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double row = 0.0;
        for (int j = 0; j < g.ny; ++j) row += wy[j] * f.value(i, j) * psi.value(i, j);
        acc += wx[i] * row;
    }
    return acc;
}

double integrate_weyl(const CoefficientSet& coeffs, const Geometry& geo,
                      const ScalarField& psi, double tau, double mu, double h) {
    if (!(psi.grid() == coeffs.grid)) throw ValidationError("integrate_weyl: psi grid mismatch");
    check_psi_support(psi);
    const Grid2D& g = coeffs.grid;
    const std::vector<double> wx = simpson_weights(g.nx, g.spacing());
    const std::vector<double> wy = simpson_weights(g.ny, g.spacing());
    const double pref = mu / (2.0 * std::numbers::pi * h);
    double acc = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double row = 0.0;
        for (int j = 0; j < g.ny; ++j) {
            const double p = psi.value(i, j);
            if (p == 0.0) continue;
            const int count = landau_level_count(coeffs.V_s.value(i, j), geo.F.value(i, j),
                                                 mu, h, tau);
            if (count == 0) continue;
            row += wy[j] * geo.F.value(i, j) * geo.sqrt_g.value(i, j) * count * p;
        }
        acc += wx[i] * row;
    }
    return pref * acc;
}

double varkappa_coeff(const CriticalPoint& cp) {
    if (cp.kind != CritKind::saddle)
        throw ValidationError("varkappa_coeff: correction coefficient applies to saddles only");
    if (cp.k <= 0.0) throw ValidationError("varkappa_coeff: degenerate Hessian");
    return -(1.0 / (4.0 * std::numbers::pi)) * cp.F_value * cp.omega1_value *
           cp.sqrt_g_value / cp.k;
}

CorrResult corr_term(const CriticalPoint& cp, const RegimeParams& rp) {
    if (rp.mu * rp.mu * rp.mu * rp.h < rp.mu3h_min) return {0.0, true};
    const double vk = varkappa_coeff(cp);
    const double sigma = sigma_gap(cp.V_value, cp.F_value, rp.mu, rp.h).sigma;
    const double inv_muh = 1.0 / (rp.mu * rp.h);
    const double arg = (sigma + 1.0 / (rp.mu * rp.mu)) * (1.0 + inv_muh);
    return {inv_muh * vk * std::log(arg), false};
}

double corr2_term(const CriticalPoint& cp, const RegimeParams& rp, bool active) {
    if (!active) return 0.0;
    if (!rp.kappa2) throw ValidationError("corr2 coefficient required (kappa2 not configured)");
    const double sigma = sigma_gap(cp.V_value, cp.F_value, rp.mu, rp.h).sigma;
    const double arg = (sigma + rp.h * rp.h) * (1.0 + 1.0 / (rp.mu * rp.h));
    return *rp.kappa2 * rp.mu * rp.h * std::log(arg);
}

Regime classify_regime(const RegimeParams& rp) {
    rp.validate();
    if (rp.mu <= rp.C_i * std::pow(rp.h, -1.0 / 3.0)) return Regime::weak_i;
    if (rp.mu * rp.h > rp.eps_ss) return Regime::superstrong;
    // second-correction window; base-10 log so the boundary constants stay O(1)
    const double corr2_threshold = rp.C_log / (rp.h * std::abs(std::log10(rp.h)));
    if (rp.mu > corr2_threshold) return Regime::intermediate_corr2;
    return Regime::intermediate_ii;
}

double Prediction::corr_sum() const {
    double s = 0.0;
    for (const auto& sc : saddle_corrections) s += sc.corr;
    return s;
}

double Prediction::corr2_sum() const {
    double s = 0.0;
    for (const auto& sc : saddle_corrections) s += sc.corr2;
    return s;
}

Prediction predict(const CoefficientSet& coeffs, const Geometry& geo, const ScalarField& psi,
                   const RegimeParams& rp, const std::vector<CriticalPoint>& points) {
    Prediction out;
    out.regime = classify_regime(rp);
    out.weyl_integral = integrate_weyl(coeffs, geo, psi, 0.0, rp.mu, rp.h);

    const Grid2D& g = coeffs.grid;
    out.nbar_field.resize(g.nx, g.ny);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            out.nbar_field(i, j) =
                sigma_gap(coeffs.V_s.value(i, j), geo.F.value(i, j), rp.mu, rp.h).nbar;

    const bool corr_active = out.regime != Regime::weak_i;
    const bool corr2_active = out.regime == Regime::intermediate_corr2;
    const CritOptions defaults;
    for (const auto& cp : points) {
        if (cp.kind != CritKind::saddle) continue;
        if (std::abs(cp.hessian.determinant()) < defaults.nondeg_tol)
            throw ValidationError("predict: degenerate saddle in critical point list");
        if (cp.boundary_unreliable) continue;
        SaddleCorrection sc;
        sc.cp = cp;
        const SigmaGap sg = sigma_gap(cp.V_value, cp.F_value, rp.mu, rp.h);
        sc.sigma = sg.sigma;
        sc.nbar = sg.nbar;
        sc.w = -cp.vf_value + (2.0 * sg.nbar + 1.0) * rp.mu * rp.h;
        sc.psi_value = psi(cp.location.x(), cp.location.y());
        if (corr_active) {
            const CorrResult cr = corr_term(cp, rp);
            sc.corr = cr.value * sc.psi_value;
            sc.below_threshold = cr.below_threshold;
            sc.corr2 = corr2_term(cp, rp, corr2_active) * sc.psi_value;
        }
        out.saddle_corrections.push_back(std::move(sc));
    }

    if (out.regime == Regime::superstrong && rp.varsigma) {
        const ScalarField vs = ScalarField::sample(g, *rp.varsigma);
        out.varsigma_term = rp.mu * rp.h * integrate_against_psi(vs, psi);
    }

    out.total = out.weyl_integral + out.corr_sum() + out.corr2_sum() + out.varsigma_term;
    return out;
}

} // namespace magspec
