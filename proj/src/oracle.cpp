#include "magspec/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "magspec/linalg.hpp"

namespace magspec {

namespace {

using cd = std::complex<double>;

struct PointEval {
    // evaluation of the coefficient fields at arbitrary points
    std::function<double(double, double)> g11, g12, g22, A1, A2, V;
};

PointEval make_eval(const CoefficientSet& c, bool need_analytic) {
    if (c.analytic) {
        auto wrap = [](const SmoothFn& f) {
            return std::function<double(double, double)>(
                [f](double x, double y) { return f(x, y); });
        };
        return {wrap(c.g11), wrap(c.g12), wrap(c.g22), wrap(c.A1), wrap(c.A2), wrap(c.V)};
    }
    if (need_analytic)
        throw ValidationError("assemble: resampling onto a different grid needs analytic "
                              "coefficient callbacks");
    auto wrap = [](const ScalarField& f) {
        return std::function<double(double, double)>(
            [&f](double x, double y) { return f(x, y); });
    };
    return {wrap(c.g11_s), wrap(c.g12_s), wrap(c.g22_s), wrap(c.A1_s), wrap(c.A2_s),
            wrap(c.V_s)};
}

int minimal_grid_for_spacing(const Grid2D& grid, double a_max) {
    // interior nodes needed so that the full-grid spacing drops below a_max
    const double span = grid.x_max - grid.x_min;
    return static_cast<int>(std::ceil(span / a_max)) + 1 - 2;
}

} // namespace

DiscreteOperator assemble(const CoefficientSet& coeffs, const Grid2D& grid, double mu,
                          double h, const OracleGuards& guards) {
    const bool resampled = !(grid == coeffs.grid);
    PointEval ev = make_eval(coeffs, resampled);

    DiscreteOperator op;
    op.grid = grid;
    op.n_interior = grid.nx - 2;
    op.mu = mu;
    op.h = h;
    const int nI = op.n_interior;
    const double a = grid.spacing();
    const double beta = mu / h;

    // resolution guards against the scalar field intensity
    double Fmax = 0.0;
    {
        ScalarField F = resampled
                            ? ScalarField::sample(grid, abs(coeffs.A2.dx() - coeffs.A1.dy()) *
                                                            sqrt(coeffs.g11 * coeffs.g22 -
                                                                 coeffs.g12 * coeffs.g12))
                            : compute_F(coeffs);
        Fmax = F.max();
    }
    op.flux_per_plaquette = mu * Fmax * a * a / h;
    op.magnetic_length = std::sqrt(h / (mu * Fmax));
    if (op.flux_per_plaquette > guards.max_flux) {
        const double a_max = std::sqrt(guards.max_flux * h / (mu * Fmax));
        std::ostringstream os;
        os << "assemble: flux per plaquette " << op.flux_per_plaquette << " exceeds "
           << guards.max_flux << "; need interior grid >= "
           << minimal_grid_for_spacing(grid, a_max) << "^2";
        throw GuardError(os.str());
    }
    if (op.magnetic_length < guards.min_maglen_cells * a) {
        const double a_max = op.magnetic_length / guards.min_maglen_cells;
        std::ostringstream os;
        os << "assemble: magnetic length " << op.magnetic_length << " under-resolved ("
           << guards.min_maglen_cells << " cells); need interior grid >= "
           << minimal_grid_for_spacing(grid, a_max) << "^2";
        throw GuardError(os.str());
    }

    op.phase_x = Eigen::ArrayXXcd::Ones(grid.nx, grid.ny);
    op.phase_y = Eigen::ArrayXXcd::Ones(grid.nx, grid.ny);
    op.phase_dp = Eigen::ArrayXXcd::Ones(grid.nx, grid.ny);
    op.phase_dm = Eigen::ArrayXXcd::Ones(grid.nx, grid.ny);

    const int N = nI * nI;
    std::vector<Eigen::Triplet<cd>> trip;
    trip.reserve(static_cast<size_t>(N) * 10);
    std::vector<double> diag(N, 0.0);

    auto interior_index = [&](int gi, int gj) -> int {
        // full-grid coords -> interior index, or -1 on the Dirichlet ring
        if (gi < 1 || gj < 1 || gi > nI || gj > nI) return -1;
        return (gi - 1) * nI + (gj - 1);
    };

    struct Dir {
        int di, dj;
        int which; // 0:x 1:y 2:d+ 3:d-
    };
    const Dir dirs[4] = {{1, 0, 0}, {0, 1, 1}, {1, 1, 2}, {1, -1, 3}};

    const double cbase = 0.5 * h * h / (a * a);
    for (int gi = 0; gi < grid.nx; ++gi) {
        for (int gj = 0; gj < grid.ny; ++gj) {
            const int tail = interior_index(gi, gj);
            for (const Dir& d : dirs) {
                const int hi = gi + d.di, hj = gj + d.dj;
                if (hi < 0 || hj < 0 || hi >= grid.nx || hj >= grid.ny) continue;
                const int head = interior_index(hi, hj);
                if (tail < 0 && head < 0) continue;
                const double mx = 0.5 * (grid.x(gi) + grid.x(hi));
                const double my = 0.5 * (grid.y(gj) + grid.y(hj));
                double w = 0.0;
                switch (d.which) {
                    case 0: w = ev.g11(mx, my); break;
                    case 1: w = ev.g22(mx, my); break;
                    case 2: w = 0.5 * ev.g12(mx, my); break;
                    case 3: w = -0.5 * ev.g12(mx, my); break;
                }
                if (w == 0.0) continue;
                if (d.which < 2 && !(w > 0.0)) {
                    std::ostringstream os;
                    os << "assemble: non-positive metric weight on edge at (" << mx << ", "
                       << my << ")";
                    throw GuardError(os.str());
                }
                const double c = cbase * w;
                const double adotdl =
                    a * (ev.A1(mx, my) * d.di + ev.A2(mx, my) * d.dj);
                const cd U = std::exp(cd(0.0, -beta * adotdl));
                switch (d.which) {
                    case 0: op.phase_x(gi, gj) = U; break;
                    case 1: op.phase_y(gi, gj) = U; break;
                    case 2: op.phase_dp(gi, gj) = U; break;
                    case 3: op.phase_dm(gi, gj) = U; break;
                }
                if (tail >= 0) diag[tail] += c;
                if (head >= 0) diag[head] += c;
                if (tail >= 0 && head >= 0) {
                    trip.emplace_back(tail, head, -c * U);
                    trip.emplace_back(head, tail, -c * std::conj(U));
                }
            }
        }
    }
    for (int i = 0; i < nI; ++i)
        for (int j = 0; j < nI; ++j) {
            const int k = i * nI + j;
            diag[k] -= 0.5 * ev.V(op.xi(i), op.yi(j));
            trip.emplace_back(k, k, cd(diag[k], 0.0));
        }

    op.matrix.resize(N, N);
    op.matrix.setFromTriplets(trip.begin(), trip.end());
    return op;
}

SpectralData eigensolve(const DiscreteOperator& op, const OracleGuards& guards) {
    const int N = op.dimension();
    if (N > guards.max_dimension) {
        std::ostringstream os;
        os << "eigensolve: N = " << N << " exceeds the dense desk-scale cap "
           << guards.max_dimension << " (about " << static_cast<int>(std::sqrt(
               static_cast<double>(guards.max_dimension)))
           << "^2 interior); reduce the grid or split the sweep";
        throw GuardError(os.str());
    }
    SpectralData sd;
    sd.grid = op.grid;
    sd.n_interior = op.n_interior;
    Eigen::MatrixXcd dense = op.matrix.toDense();
    hermitian_eigensolve(dense, sd.eigenvalues);
    // normalize in the discrete inner product sum |u|^2 a^2
    sd.eigenvectors = std::move(dense);
    sd.eigenvectors *= 1.0 / op.grid.spacing();
    return sd;
}

double spectral_count(const SpectralData& sd, const ScalarField& psi, double tau) {
    if (!(psi.grid() == sd.grid))
        throw ValidationError("spectral_count: psi must be sampled on the oracle grid");
    const int nI = sd.n_interior;
    const double a2 = sd.grid.spacing() * sd.grid.spacing();
    Eigen::VectorXd psi_int(nI * nI);
    for (int i = 0; i < nI; ++i)
        for (int j = 0; j < nI; ++j) psi_int(i * nI + j) = psi.value(i + 1, j + 1);
    double acc = 0.0;
    for (int k = 0; k < sd.eigenvalues.size(); ++k) {
        if (sd.eigenvalues(k) > tau) break;
        acc += (sd.eigenvectors.col(k).cwiseAbs2().dot(psi_int)) * a2;
    }
    return acc;
}

double gauge_check(const CoefficientSet& coeffs, const Grid2D& grid, double mu, double h,
                   const SmoothFn& chi, const OracleGuards& guards) {
    if (!coeffs.analytic)
        throw ValidationError("gauge_check: needs analytic coefficients");
    CoefficientSet shifted = CoefficientSet::make(
        coeffs.grid, coeffs.g11, coeffs.g12, coeffs.g22, coeffs.A1 + chi.dx(),
        coeffs.A2 + chi.dy(), coeffs.V, coeffs.epsilon0, coeffs.theorem2_mode);
    SpectralData sa = eigensolve(assemble(coeffs, grid, mu, h, guards), guards);
    SpectralData sb = eigensolve(assemble(shifted, grid, mu, h, guards), guards);
    const double scale = std::max(sa.spectral_radius(), 1e-300);
    return (sa.eigenvalues - sb.eigenvalues).cwiseAbs().maxCoeff() / scale;
}

void save_eigenvalues(const std::string& path, const Eigen::VectorXd& eigenvalues) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("save_eigenvalues: cannot open " + path);
    const char magic[4] = {'L', 'A', 'E', 'V'};
    const std::uint32_t version = 1;
    const std::uint32_t n = static_cast<std::uint32_t>(eigenvalues.size());
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(eigenvalues.data()),
              static_cast<std::streamsize>(sizeof(double) * eigenvalues.size()));
    if (!out) throw ValidationError("save_eigenvalues: write failed for " + path);
}

Eigen::VectorXd load_eigenvalues(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("load_eigenvalues: cannot open " + path);
    char magic[4];
    std::uint32_t version = 0, n = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    if (!in || std::memcmp(magic, "LAEV", 4) != 0)
        throw ValidationError("load_eigenvalues: bad magic in " + path);
    if (version != 1)
        throw ValidationError("load_eigenvalues: unsupported version in " + path);
    Eigen::VectorXd v(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(sizeof(double) * n));
    if (!in) throw ValidationError("load_eigenvalues: truncated payload in " + path);
    return v;
}

} // namespace magspec
