#include "qmono/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qmono/linalg.hpp"

namespace qmono {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t d = 1;
  for (std::size_t x : dims) d *= x;
  return d;
}

void check_dims(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw std::domain_error("state: empty subsystem list");
  for (std::size_t d : dims)
    if (d < 2) throw std::domain_error("state: subsystem dimensions must be >= 2");
}

// stride[k] = prod_{j>k} dims[j]
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

void check_subsystem_indices(const std::vector<std::size_t>& idx, std::size_t n,
                             const char* what) {
  if (idx.empty()) throw std::domain_error(std::string(what) + ": empty subsystem set");
  std::vector<bool> seen(n, false);
  for (std::size_t i : idx) {
    if (i >= n) throw std::domain_error(std::string(what) + ": subsystem index out of range");
    if (seen[i]) throw std::domain_error(std::string(what) + ": duplicate subsystem index");
    seen[i] = true;
  }
}

}  // namespace

std::size_t PureState::total_dim() const { return product(dims); }

bool PureState::all_qubits() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 2; });
}

PureState make_pure_state(std::vector<std::size_t> dims, std::vector<cplx> amplitudes) {
  check_dims(dims);
  if (amplitudes.size() != product(dims))
    throw std::domain_error("pure state: amplitude count does not match dimensions");
  double norm2 = 0.0;
  for (const cplx& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::domain_error("pure state: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::domain_error("pure state: squared amplitude sum deviates from 1 by more than 1e-12");
  return PureState{std::move(dims), std::move(amplitudes)};
}

DensityMatrix density_of(const PureState& psi) {
  const std::size_t d = psi.total_dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return DensityMatrix{psi.dims, std::move(m)};
}

void validate_density(const DensityMatrix& rho) {
  check_dims(rho.dims);
  const std::size_t d = product(rho.dims);
  if (!rho.matrix.square() || rho.matrix.rows() != d)
    throw std::domain_error("density matrix: shape does not match subsystem dimensions");
  if (!rho.matrix.is_finite()) throw std::domain_error("density matrix: non-finite entries");
  const double herm = rho.matrix.hermiticity_defect();
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "density matrix: Hermiticity defect " << herm << " violates 1e-10 invariant";
    throw std::domain_error(os.str());
  }
  const double tr = rho.matrix.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "density matrix: trace " << tr << " violates unit-trace invariant (tolerance 1e-10)";
    throw std::domain_error(os.str());
  }
  const std::vector<double> ev = hermitian_eigenvalues(rho.matrix);
  if (ev.back() < -1e-9) {
    std::ostringstream os;
    os << "density matrix: smallest eigenvalue " << ev.back()
       << " violates positivity invariant (tolerance -1e-9)";
    throw std::domain_error(os.str());
  }
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const cplx& z : rho.matrix.data()) s += std::norm(z);
  return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep) {
  const std::size_t n = rho.dims.size();
  check_subsystem_indices(keep, n, "partial_trace");
  std::sort(keep.begin(), keep.end());

  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);

  std::vector<std::size_t> kept_dims;
  for (std::size_t i : keep) kept_dims.push_back(rho.dims[i]);

  const std::vector<std::size_t> stride = strides_of(rho.dims);
  const std::size_t dk = product(kept_dims);
  std::size_t dt = 1;
  for (std::size_t i : traced) dt *= rho.dims[i];

  // Offsets of every kept (row, col) digit combination and of every traced assignment.
  auto offsets_for = [&](const std::vector<std::size_t>& subs) {
    std::vector<std::size_t> offs(1, 0);
    for (std::size_t s : subs) {
      std::vector<std::size_t> next;
      next.reserve(offs.size() * rho.dims[s]);
      for (std::size_t base : offs)
        for (std::size_t b = 0; b < rho.dims[s]; ++b) next.push_back(base + b * stride[s]);
      offs = std::move(next);
    }
    return offs;
  };
  const std::vector<std::size_t> kept_offs = offsets_for(keep);
  const std::vector<std::size_t> traced_offs = offsets_for(traced);

  ComplexMatrix out(dk, dk);
  const std::size_t side = rho.matrix.rows();
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::size_t e = 0; e < dt; ++e)
        acc += rho.matrix.data()[(kept_offs[i] + traced_offs[e]) * side + kept_offs[j] +
                                 traced_offs[e]];
      out(i, j) = acc;
    }
  return DensityMatrix{std::move(kept_dims), std::move(out)};
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  return partial_transpose(rho, std::vector<std::size_t>{subsystem});
}

ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                const std::vector<std::size_t>& subsystems) {
  const std::size_t n = rho.dims.size();
  check_subsystem_indices(subsystems, n, "partial_transpose");
  const std::vector<std::size_t> stride = strides_of(rho.dims);
  const std::size_t d = rho.matrix.rows();

  auto digit = [&](std::size_t index, std::size_t s) { return (index / stride[s]) % rho.dims[s]; };

  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t rr = r, cc = c;
      for (std::size_t s : subsystems) {
        const std::size_t br = digit(r, s), bc = digit(c, s);
        rr = rr - br * stride[s] + bc * stride[s];
        cc = cc - bc * stride[s] + br * stride[s];
      }
      out(rr, cc) = rho.matrix(r, c);
    }
  return out;
}

Bipartition make_bipartition(std::vector<std::size_t> side_a, std::size_t n_subsystems) {
  check_subsystem_indices(side_a, n_subsystems, "bipartition");
  std::sort(side_a.begin(), side_a.end());
  std::vector<std::size_t> side_b;
  for (std::size_t i = 0; i < n_subsystems; ++i)
    if (!std::binary_search(side_a.begin(), side_a.end(), i)) side_b.push_back(i);
  if (side_b.empty()) throw std::domain_error("bipartition: side B must be nonempty");
  return Bipartition{std::move(side_a), std::move(side_b)};
}

Bipartition make_bipartition(std::vector<std::size_t> side_a, std::vector<std::size_t> side_b,
                             std::size_t n_subsystems) {
  std::vector<std::size_t> all = side_a;
  all.insert(all.end(), side_b.begin(), side_b.end());
  check_subsystem_indices(all, n_subsystems, "bipartition");
  if (all.size() != n_subsystems)
    throw std::domain_error("bipartition: sides must cover every subsystem");
  if (side_a.empty() || side_b.empty())
    throw std::domain_error("bipartition: both sides must be nonempty");
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  return Bipartition{std::move(side_a), std::move(side_b)};
}

DensityMatrix reduced_state(const PureState& psi, const Bipartition& cut) {
  if (cut.side_a.empty() || cut.side_b.empty() ||
      cut.side_a.size() + cut.side_b.size() != psi.dims.size())
    throw std::domain_error("reduced_state: cut does not match the state");
  return partial_trace(density_of(psi), cut.side_a);
}

PureState bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_pure_state({2, 2}, {r, 0.0, 0.0, r});
}

PureState ghz_state(std::size_t n_qubits) {
  if (n_qubits < 2) throw std::domain_error("ghz_state: need at least 2 qubits");
  std::vector<cplx> amps(std::size_t{1} << n_qubits, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = r;
  amps.back() = r;
  return make_pure_state(std::vector<std::size_t>(n_qubits, 2), std::move(amps));
}

PureState w_state(std::size_t n_qubits) {
  if (n_qubits < 2) throw std::domain_error("w_state: need at least 2 qubits");
  std::vector<cplx> amps(std::size_t{1} << n_qubits, 0.0);
  const double r = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (std::size_t k = 0; k < n_qubits; ++k) amps[std::size_t{1} << k] = r;
  return make_pure_state(std::vector<std::size_t>(n_qubits, 2), std::move(amps));
}

}  // namespace qmono
