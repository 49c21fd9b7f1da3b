#pragma once

#include <cstddef>
#include <vector>

#include "qmono/complex_matrix.hpp"

namespace qmono {

// Subsystem 0 is the leftmost tensor factor; basis states are indexed
// big-endian, |b0 b1 ... b_{n-1}> <-> sum_k b_k * prod_{j>k} d_j.

struct PureState {
  std::vector<std::size_t> dims;
  std::vector<cplx> amplitudes;

  std::size_t num_subsystems() const { return dims.size(); }
  std::size_t total_dim() const;
  bool all_qubits() const;
};

struct DensityMatrix {
  std::vector<std::size_t> dims;
  ComplexMatrix matrix;  // square, side = prod(dims)
};

/// Checks dims (each >= 2) and unit norm within 1e-12.
PureState make_pure_state(std::vector<std::size_t> dims, std::vector<cplx> amplitudes);

DensityMatrix density_of(const PureState& psi);

/// Hermitian within 1e-10, unit trace within 1e-10, spectrum >= -1e-9.
/// Throws std::domain_error naming the violated invariant.
void validate_density(const DensityMatrix& rho);

/// Tr(rho^2), evaluated as the squared Frobenius norm.
double purity(const DensityMatrix& rho);

/// Reduced density matrix on the kept subsystems (ascending original order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep);

/// Transposition of one subsystem's indices; Hermiticity is preserved.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const std::vector<std::size_t>& subsystems);

struct Bipartition {
  std::vector<std::size_t> side_a, side_b;
};

/// side_b is filled with the complement; both sides must be nonempty.
Bipartition make_bipartition(std::vector<std::size_t> side_a, std::size_t n_subsystems);
/// Both sides given; must be disjoint, nonempty and cover 0..n-1.
Bipartition make_bipartition(std::vector<std::size_t> side_a, std::vector<std::size_t> side_b,
                             std::size_t n_subsystems);

/// Reduced state of |psi><psi| on side_a of the cut.
DensityMatrix reduced_state(const PureState& psi, const Bipartition& cut);

PureState bell_phi_plus();
PureState ghz_state(std::size_t n_qubits);
PureState w_state(std::size_t n_qubits);

}  // namespace qmono
