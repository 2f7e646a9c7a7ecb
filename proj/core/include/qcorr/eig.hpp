#ifndef QCORR_EIG_HPP
#define QCORR_EIG_HPP

#include <vector>

#include "qcorr/matrix.hpp"

namespace qcorr {

struct EigResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps complex plane rotations over all off-diagonal pairs until the
/// off-diagonal Frobenius norm drops below tol (default 1e-12); throws
/// std::runtime_error if that has not happened after 100 sweeps.
/// Reconstruction V diag(values) V† matches the input to ~10*tol.
EigResult hermitian_eig(const HermitianMatrix& m, double tol = 1e-12);

double min_eigenvalue(const HermitianMatrix& m);
double max_eigenvalue(const HermitianMatrix& m);

/// Sum of sign(lambda_i) |v_i><v_i| over the spectral decomposition,
/// with sign(0) := +1, so the result is an involution.
HermitianMatrix spectral_sign(const HermitianMatrix& m);

}  // namespace qcorr

#endif
