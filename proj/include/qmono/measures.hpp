#pragma once

#include <cstdint>
#include <string>

#include "qmono/states.hpp"

namespace qmono {

enum class Measure { concurrence, negativity, cren, eof };

std::string to_string(Measure m);
/// Accepts "c|n|cren|eof" and the full names.
Measure parse_measure(const std::string& token);

/// sqrt(2 (1 - Tr rho_A^2)) across the cut of a normalized pure state.
double concurrence_pure(const PureState& psi, const Bipartition& cut);

/// Two-qubit mixed-state concurrence, closed form:
/// max{0, s1 - s2 - s3 - s4} with s_i the descending square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy).
double concurrence_two_qubit(const DensityMatrix& rho);

/// ||rho^{T_A}|| - 1 (doubled convention: twice the common definition).
double negativity(const DensityMatrix& rho, std::size_t subsystem_a);
double negativity(const DensityMatrix& rho, const Bipartition& cut);

/// Convex-roof extended negativity of a two-qubit state. Coincides with the
/// two-qubit concurrence: pure-state negativity equals pure-state concurrence
/// on 2x2, so both convex roofs are the same functional.
double cren_two_qubit(const DensityMatrix& rho);

/// H(x) = -x log2 x - (1-x) log2(1-x), H(0) = H(1) = 0.
double binary_entropy(double x);

/// f(x) = H((1 + sqrt(1-x)) / 2) on [0, 1].
double f_of(double x);

/// -Tr(rho log2 rho).
double von_neumann_entropy(const DensityMatrix& rho);

/// Two-qubit entanglement of formation, f(C^2).
double eof_two_qubit(const DensityMatrix& rho);

/// Entropy of the reduced state on side_a.
double eof_pure(const PureState& psi, const Bipartition& cut);

/// Stochastic upper bound on the convex roof of a pure-state measure:
/// minimum over random fixed-rank decompositions (eigendecomposition mixed by
/// Haar isometries), plus the eigendecomposition itself. Oracle only, not a
/// performance path. `measure` is concurrence, negativity (also serving the
/// CREN roof) or eof.
double convex_roof_upper_bound(const DensityMatrix& rho, const Bipartition& cut, Measure measure,
                               int restarts, std::uint64_t seed);

}  // namespace qmono
