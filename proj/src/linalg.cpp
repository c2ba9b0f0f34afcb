#include "magspec/linalg.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <string>

#include "magspec/errors.hpp"

namespace magspec {

void hermitian_eigensolve(Eigen::MatrixXcd& a, Eigen::VectorXd& eigenvalues) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    if (a.cols() != n) throw ValidationError("hermitian_eigensolve: matrix not square");
    eigenvalues.resize(n);
    const lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', n,
        reinterpret_cast<lapack_complex_double*>(a.data()), n, eigenvalues.data());
    if (info != 0)
        throw GuardError("hermitian_eigensolve: zheevd failed to converge (block " +
                         std::to_string(info) + ")");
}

} // namespace magspec
