#pragma once

#include <vector>

#include "qmono/complex_matrix.hpp"

namespace qmono {

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Eigenvalues of a Hermitian matrix in descending order.
/// Cyclic Jacobi sweeps; converges on off-diagonal Frobenius norm 1e-14.
/// Throws std::domain_error if the input deviates from Hermitian by more than 1e-8.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Same solver, also accumulating the eigenvector basis.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Singular values in descending order (one-sided Jacobi on columns).
/// Accurate to ~1e-15 * ||m|| absolutely, also for vanishing singular values.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values, Tr sqrt(m m^dag).
double trace_norm(const ComplexMatrix& m);

/// Hermitian square root of a PSD matrix; eigenvalues below zero are clamped.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

}  // namespace qmono
