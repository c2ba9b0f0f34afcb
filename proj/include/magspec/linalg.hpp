#ifndef MAGSPEC_LINALG_HPP
#define MAGSPEC_LINALG_HPP

#include <Eigen/Core>
#include <complex>

namespace magspec {

/**
 * Full eigendecomposition of a dense Hermitian matrix (LAPACK zheevd,
 * divide and conquer). The input is destroyed; eigenvectors come back in
 * its place, eigenvalues ascending.
 */
void hermitian_eigensolve(Eigen::MatrixXcd& a, Eigen::VectorXd& eigenvalues);

} // namespace magspec

#endif
