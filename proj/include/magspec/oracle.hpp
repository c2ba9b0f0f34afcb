#ifndef MAGSPEC_ORACLE_HPP
#define MAGSPEC_ORACLE_HPP

#include <Eigen/SparseCore>
#include <complex>
#include <string>

#include "magspec/fields.hpp"

namespace magspec {

/**
 * Gauge-covariant finite-difference realization of the operator on the
 * interior nodes of the square (Dirichlet boundary). Each grid edge carries
 * a hopping term with the metric weight at the edge midpoint and a Peierls
 * phase exp(-i (mu/h) A(mid) . dl); the cross term g^{12} is split
 * symmetrically over the two plaquette diagonals with weights +-g^{12}/2.
 */
struct DiscreteOperator {
    Grid2D grid;     // full grid including the Dirichlet ring
    int n_interior;  // interior nodes per axis
    double mu = 0.0, h = 0.0;
    Eigen::SparseMatrix<std::complex<double>> matrix;
    // unit phases of edges leaving node (i,j) in +x, +y, +(1,1), +(1,-1)
    Eigen::ArrayXXcd phase_x, phase_y, phase_dp, phase_dm;
    double flux_per_plaquette = 0.0; // mu F_max a^2 / h
    double magnetic_length = 0.0;    // sqrt(h / (mu F_max))

    int dimension() const { return n_interior * n_interior; }
    int index(int i, int j) const { return i * n_interior + j; } // interior coords
    double xi(int i) const { return grid.x(i + 1); }
    double yi(int j) const { return grid.y(j + 1); }
};

struct OracleGuards {
    double max_flux = 0.3;        // per plaquette
    double min_maglen_cells = 2.5; // magnetic length over spacing
    int max_dimension = 4500;     // dense eigensolve cap
};

/// Assemble on `grid` (coefficients are resampled when grid differs from
/// coeffs.grid; that requires analytic callbacks).
DiscreteOperator assemble(const CoefficientSet& coeffs, const Grid2D& grid, double mu,
                          double h, const OracleGuards& guards = {});

struct SpectralData {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXcd eigenvectors; // columns, orthonormal in sum |u|^2 a^2
    Grid2D grid;
    int n_interior = 0;

    double spectral_radius() const {
        if (eigenvalues.size() == 0) return 0.0;
        return std::max(std::abs(eigenvalues(0)), std::abs(eigenvalues(eigenvalues.size() - 1)));
    }
};

/// Dense Hermitian decomposition of the discrete operator.
SpectralData eigensolve(const DiscreteOperator& op, const OracleGuards& guards = {});

/// Localized counting functional sum_{lambda_k <= tau} sum_x psi(x) |u_k(x)|^2 a^2.
double spectral_count(const SpectralData& sd, const ScalarField& psi, double tau);

/// Max relative eigenvalue deviation between gauges A and A + grad(chi).
double gauge_check(const CoefficientSet& coeffs, const Grid2D& grid, double mu, double h,
                   const SmoothFn& chi, const OracleGuards& guards = {});

/// Binary eigenvalue cache: magic "LAEV", u32 version, u32 count,
/// little-endian f64 payload.
void save_eigenvalues(const std::string& path, const Eigen::VectorXd& eigenvalues);
Eigen::VectorXd load_eigenvalues(const std::string& path);

} // namespace magspec

#endif
