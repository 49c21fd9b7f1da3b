#include "qmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmono/linalg.hpp"
#include "qmono/random.hpp"

namespace qmono {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dims != std::vector<std::size_t>{2, 2})
    throw std::domain_error(std::string(what) + ": expected a 2 (x) 2 density matrix");
}

// sy (x) sy in the computational basis; real symmetric.
const ComplexMatrix& spin_flip_yy() {
  static const ComplexMatrix m = [] {
    ComplexMatrix f(4, 4);
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
  }();
  return m;
}

double pure_measure_across_cut(const PureState& psi, const Bipartition& cut, Measure measure) {
  switch (measure) {
    case Measure::concurrence:
      return concurrence_pure(psi, cut);
    case Measure::negativity:
    case Measure::cren:  // pure-state CREN is the pure-state negativity
      return negativity(density_of(psi), cut);
    case Measure::eof:
      return eof_pure(psi, cut);
  }
  throw std::domain_error("unknown measure");
}

}  // namespace

std::string to_string(Measure m) {
  switch (m) {
    case Measure::concurrence: return "concurrence";
    case Measure::negativity: return "negativity";
    case Measure::cren: return "cren";
    case Measure::eof: return "eof";
  }
  return "?";
}

Measure parse_measure(const std::string& token) {
  if (token == "c" || token == "concurrence") return Measure::concurrence;
  if (token == "n" || token == "negativity") return Measure::negativity;
  if (token == "cren") return Measure::cren;
  if (token == "eof") return Measure::eof;
  throw std::domain_error("unknown measure '" + token + "' (expected c|n|cren|eof)");
}

double concurrence_pure(const PureState& psi, const Bipartition& cut) {
  const DensityMatrix rho_a = reduced_state(psi, cut);
  const double p = purity(rho_a);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double concurrence_two_qubit(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence_two_qubit");

  // Subnormalized eigenvector decomposition; tau_ij = <v_i| sy x sy |conj(v_j)>
  // is the symmetric preconcurrence matrix whose singular values are the s_i.
  // This route keeps vanishing s_i at O(eps) instead of O(sqrt(eps)).
  const EigenSystem es = hermitian_eigensystem(rho.matrix);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < es.values.size(); ++k)
    if (es.values[k] > 1e-13) support.push_back(k);
  if (support.empty()) return 0.0;

  const ComplexMatrix& yy = spin_flip_yy();
  const std::size_t k = support.size();
  ComplexMatrix tau(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      cplx acc = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          if (yy(a, b) == cplx{}) continue;
          acc += std::conj(es.vectors(a, support[i])) * yy(a, b) *
                 std::conj(es.vectors(b, support[j]));
        }
      acc *= std::sqrt(es.values[support[i]] * es.values[support[j]]);
      tau(i, j) = acc;
      tau(j, i) = acc;
    }

  const std::vector<double> s = singular_values(tau);
  double c = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) c -= s[i];
  return std::max(0.0, c);
}

double negativity(const DensityMatrix& rho, std::size_t subsystem_a) {
  return std::max(0.0, trace_norm(partial_transpose(rho, subsystem_a)) - 1.0);
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
  if (cut.side_a.size() + cut.side_b.size() != rho.dims.size())
    throw std::domain_error("negativity: cut does not match the state");
  return std::max(0.0, trace_norm(partial_transpose(rho, cut.side_a)) - 1.0);
}

double cren_two_qubit(const DensityMatrix& rho) {
  require_two_qubits(rho, "cren_two_qubit");
  return concurrence_two_qubit(rho);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0,1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double f_of(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("f_of: argument outside [0,1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - x))));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(rho.matrix);
  double s = 0.0;
  for (double lam : ev)
    if (lam > 1e-15) s -= lam * std::log2(lam);
  return std::max(0.0, s);
}

double eof_two_qubit(const DensityMatrix& rho) {
  require_two_qubits(rho, "eof_two_qubit");
  const double c = concurrence_two_qubit(rho);
  return f_of(std::min(1.0, c * c));
}

double eof_pure(const PureState& psi, const Bipartition& cut) {
  return von_neumann_entropy(reduced_state(psi, cut));
}

double convex_roof_upper_bound(const DensityMatrix& rho, const Bipartition& cut, Measure measure,
                               int restarts, std::uint64_t seed) {
  if (measure == Measure::cren) measure = Measure::negativity;  // same roof
  if (cut.side_a.size() + cut.side_b.size() != rho.dims.size())
    throw std::domain_error("convex_roof_upper_bound: cut does not match the state");

  const EigenSystem es = hermitian_eigensystem(rho.matrix);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < es.values.size(); ++k)
    if (es.values[k] > 1e-12) support.push_back(k);
  if (support.empty()) throw std::domain_error("convex_roof_upper_bound: zero state");

  const std::size_t rank = support.size();
  const std::size_t members = rank * rank;
  const std::size_t dim = rho.matrix.rows();

  // Average measure of the decomposition induced by an isometry V (members x rank):
  // member_j = sum_i conj(V_ji) sqrt(p_i) e_i.
  auto decomposition_average = [&](const ComplexMatrix& v) {
    double avg = 0.0;
    for (std::size_t j = 0; j < v.rows(); ++j) {
      std::vector<cplx> amps(dim, 0.0);
      double q = 0.0;
      for (std::size_t i = 0; i < rank; ++i) {
        const cplx w = std::conj(v(j, i)) * std::sqrt(es.values[support[i]]);
        if (w == cplx{}) continue;
        for (std::size_t a = 0; a < dim; ++a) amps[a] += w * es.vectors(a, support[i]);
      }
      for (const cplx& a : amps) q += std::norm(a);
      if (q < 1e-14) continue;
      const double inv = 1.0 / std::sqrt(q);
      for (cplx& a : amps) a *= inv;
      avg += q * pure_measure_across_cut(PureState{rho.dims, amps}, cut, measure);
    }
    return avg;
  };

  // The eigendecomposition itself is the first candidate.
  ComplexMatrix embed(members, rank);
  for (std::size_t i = 0; i < rank; ++i) embed(i, i) = 1.0;
  double best = decomposition_average(embed);

  Prng rng(seed);
  for (int r = 0; r < restarts; ++r)
    best = std::min(best, decomposition_average(haar_random_isometry(members, rank, rng)));
  return best;
}

}  // namespace qmono
