#include "magspec/critical_points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace magspec {

const char* to_string(CritKind k) {
    switch (k) {
        case CritKind::minimum: return "minimum";
        case CritKind::maximum: return "maximum";
        case CritKind::saddle: return "saddle";
        default: return "none";
    }
}

namespace {

using Fn2 = std::function<double(double, double)>;

struct VfModel {
    Fn2 vf, gx, gy, hxx, hxy, hyy;
};

VfModel make_model(const CoefficientSet& coeffs) {
    if (coeffs.analytic) {
        SmoothFn F = abs(coeffs.A2.dx() - coeffs.A1.dy()) *
                     sqrt(coeffs.g11 * coeffs.g22 - coeffs.g12 * coeffs.g12);
        SmoothFn vf = coeffs.V / F;
        SmoothFn gx = vf.dx(), gy = vf.dy();
        SmoothFn hxx = gx.dx(), hxy = gx.dy(), hyy = gy.dy();
        auto wrap = [](SmoothFn f) {
            return Fn2([f = std::move(f)](double x, double y) { return f(x, y); });
        };
        return {wrap(vf), wrap(gx), wrap(gy), wrap(hxx), wrap(hxy), wrap(hyy)};
    }
    // sampled fallback: stencil derivatives, bilinear interpolation off-grid
    const double a = coeffs.grid.spacing();
    Eigen::ArrayXXd F12 = stencil_derivative(coeffs.A2_s.values(), a, 0) -
                          stencil_derivative(coeffs.A1_s.values(), a, 1);
    Eigen::ArrayXXd det = coeffs.g11_s.values() * coeffs.g22_s.values() -
                          coeffs.g12_s.values() * coeffs.g12_s.values();
    Eigen::ArrayXXd vf = coeffs.V_s.values() / (F12.abs() * det.sqrt());
    auto field = [&](Eigen::ArrayXXd v) { return ScalarField(coeffs.grid, std::move(v)); };
    ScalarField vf_s = field(vf);
    ScalarField gx_s = field(stencil_derivative(vf, a, 0));
    ScalarField gy_s = field(stencil_derivative(vf, a, 1));
    ScalarField hxx_s = field(stencil_derivative(gx_s.values(), a, 0));
    ScalarField hxy_s = field(stencil_derivative(gx_s.values(), a, 1));
    ScalarField hyy_s = field(stencil_derivative(gy_s.values(), a, 1));
    auto wrap = [](ScalarField f) {
        return Fn2([f = std::move(f)](double x, double y) { return f(x, y); });
    };
    return {wrap(vf_s), wrap(gx_s), wrap(gy_s), wrap(hxx_s), wrap(hxy_s), wrap(hyy_s)};
}

CriticalPoint fill_point(const CoefficientSet& coeffs, const Geometry& geo, const VfModel& m,
                         const Eigen::Vector2d& p, const CritOptions& opt) {
    CriticalPoint cp;
    cp.location = p;
    const double gx = m.gx(p.x(), p.y()), gy = m.gy(p.x(), p.y());
    cp.grad_norm = std::hypot(gx, gy);
    cp.hessian << m.hxx(p.x(), p.y()), m.hxy(p.x(), p.y()), m.hxy(p.x(), p.y()),
        m.hyy(p.x(), p.y());
    const double det = cp.hessian.determinant();
    cp.k = std::sqrt(std::abs(det));
    if (cp.grad_norm <= opt.newton_tol) {
        if (det < 0)
            cp.kind = CritKind::saddle;
        else
            cp.kind = cp.hessian.trace() > 0 ? CritKind::minimum : CritKind::maximum;
    } else {
        cp.kind = CritKind::none;
    }
    cp.vf_value = m.vf(p.x(), p.y());
    cp.F_value = geo.F(p.x(), p.y());
    cp.V_value = coeffs.analytic ? coeffs.V(p.x(), p.y()) : coeffs.V_s(p.x(), p.y());
    cp.sqrt_g_value = geo.sqrt_g(p.x(), p.y());
    cp.omega1_value = geo.omega1(p.x(), p.y());
    cp.curvature_value = geo.curvature(p.x(), p.y());
    return cp;
}

} // namespace

std::vector<CriticalPoint> find_critical_points(const CoefficientSet& coeffs,
                                                double search_radius, const CritOptions& opt,
                                                std::vector<std::string>* warnings) {
    if (search_radius > 1.0)
        throw ValidationError("find_critical_points: search_radius must be <= 1");
    const VfModel m = make_model(coeffs);
    const Grid2D& g = coeffs.grid;

    // seed where both gradient components change sign over a cell
    Eigen::ArrayXXd gxv(g.nx, g.ny), gyv(g.nx, g.ny);
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            gxv(i, j) = m.gx(g.x(i), g.y(j));
            gyv(i, j) = m.gy(g.x(i), g.y(j));
        }
    std::vector<Eigen::Vector2d> seeds;
    for (int i = 0; i + 1 < g.nx; ++i)
        for (int j = 0; j + 1 < g.ny; ++j) {
            const double cx = 0.5 * (g.x(i) + g.x(i + 1));
            const double cy = 0.5 * (g.y(j) + g.y(j + 1));
            if (std::hypot(cx, cy) > search_radius) continue;
            auto signs = [&](const Eigen::ArrayXXd& v) {
                double lo = std::min(std::min(v(i, j), v(i + 1, j)),
                                     std::min(v(i, j + 1), v(i + 1, j + 1)));
                double hi = std::max(std::max(v(i, j), v(i + 1, j)),
                                     std::max(v(i, j + 1), v(i + 1, j + 1)));
                return lo <= 0.0 && hi >= 0.0;
            };
            if (signs(gxv) && signs(gyv)) seeds.emplace_back(cx, cy);
        }

    std::vector<Eigen::Vector2d> found;
    for (const auto& seed : seeds) {
        Eigen::Vector2d p = seed;
        bool ok = false;
        for (int it = 0; it < opt.max_iter; ++it) {
            const double gx = m.gx(p.x(), p.y()), gy = m.gy(p.x(), p.y());
            if (std::hypot(gx, gy) <= opt.newton_tol) { ok = true; break; }
            Eigen::Matrix2d H;
            H << m.hxx(p.x(), p.y()), m.hxy(p.x(), p.y()), m.hxy(p.x(), p.y()),
                m.hyy(p.x(), p.y());
            const double det = H.determinant();
            if (det == 0.0 || !std::isfinite(det)) break;
            Eigen::Vector2d step = H.inverse() * Eigen::Vector2d(-gx, -gy);
            p += step;
            if (!p.allFinite() || p.norm() > search_radius + 0.1) break;
        }
        if (!ok) {
            if (warnings) {
                std::ostringstream os;
                os << "Newton did not converge from seed (" << seed.x() << ", " << seed.y()
                   << "); seed discarded";
                warnings->push_back(os.str());
            }
            continue;
        }
        if (p.norm() > search_radius) continue;
        found.push_back(p);
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
    });
    std::vector<Eigen::Vector2d> unique;
    for (const auto& p : found) {
        bool dup = false;
        for (const auto& q : unique)
            if ((p - q).norm() < 2 * opt.dedup_radius) { dup = true; break; }
        if (!dup) unique.push_back(p);
    }

    const Geometry geo = analyze_geometry(coeffs);
    std::vector<CriticalPoint> out;
    for (const auto& p : unique) {
        CriticalPoint cp = fill_point(coeffs, geo, m, p, opt);
        if (std::abs(cp.hessian.determinant()) < opt.nondeg_tol) {
            std::ostringstream os;
            os << "degenerate critical point at (" << p.x() << ", " << p.y()
               << "): |det Hess(V/F)| = " << std::abs(cp.hessian.determinant()) << " < "
               << opt.nondeg_tol;
            throw GuardError(os.str());
        }
        cp.boundary_unreliable = (search_radius - p.norm() <= opt.dedup_radius);
        out.push_back(std::move(cp));
    }
    return out;
}

CriticalPoint hessian_data(const CoefficientSet& coeffs, const Eigen::Vector2d& location,
                           const CritOptions& opt) {
    if (!coeffs.grid.interior(location.x(), location.y()))
        throw ValidationError("hessian_data: location outside the grid interior");
    const VfModel m = make_model(coeffs);
    const Geometry geo = analyze_geometry(coeffs);
    return fill_point(coeffs, geo, m, location, opt);
}

} // namespace magspec
