#include "qmono/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmono {

namespace {

// Plane rotation G embedded at (p,q): G(p,p)=c, G(p,q)=-sigma, G(q,p)=conj(sigma), G(q,q)=c.
// Chosen so that (G^dag A G)(p,q) vanishes for a Hermitian A.
struct Rotation {
  double c;
  cplx sigma;
};

Rotation make_rotation(double app, double aqq, cplx apq) {
  const double mag = std::abs(apq);
  const cplx phase = apq / mag;
  const double tau = (app - aqq) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c * phase};
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A <- G^dag A G and V <- V G.
void apply_similarity(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q,
                      const Rotation& r) {
  const std::size_t n = a.rows();
  const double c = r.c;
  const cplx s = r.sigma;
  for (std::size_t k = 0; k < n; ++k) {  // columns
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + std::conj(s) * akq;
    a(k, q) = -s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // rows
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + s * aqk;
    a(q, k) = -std::conj(s) * apk + c * aqk;
  }
  if (v) {
    for (std::size_t k = 0; k < v->rows(); ++k) {
      const cplx vkp = (*v)(k, p), vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp + std::conj(s) * vkq;
      (*v)(k, q) = -s * vkp + c * vkq;
    }
  }
}

EigenSystem jacobi_hermitian(ComplexMatrix a, bool want_vectors) {
  if (!a.square()) throw std::domain_error("hermitian eigensolver: matrix not square");
  if (!a.is_finite()) throw std::domain_error("hermitian eigensolver: non-finite entries");
  if (a.hermiticity_defect() > 1e-8)
    throw std::domain_error("hermitian eigensolver: input not Hermitian within 1e-8");

  const std::size_t n = a.rows();
  // Symmetrize to remove sub-tolerance noise before iterating.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }

  ComplexMatrix v;
  if (want_vectors) v = ComplexMatrix::identity(n);

  const double threshold = 1e-14 * std::max(1.0, a.frobenius_norm());
  const double skip = threshold / (10.0 * static_cast<double>(n));
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("hermitian eigensolver: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= skip) continue;
        const Rotation r = make_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        apply_similarity(a, want_vectors ? &v : nullptr, p, q, r);
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]).real();
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return jacobi_hermitian(m, false).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) { return jacobi_hermitian(m, true); }

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (!m.is_finite()) throw std::domain_error("singular_values: non-finite entries");
  // Work on the tall orientation so columns span the smaller side.
  ComplexMatrix b = (m.rows() >= m.cols()) ? m : m.adjoint();
  const std::size_t n = b.cols();

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double hpp = 0.0, hqq = 0.0;
        cplx hpq = 0.0;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          hpp += std::norm(b(k, p));
          hqq += std::norm(b(k, q));
          hpq += std::conj(b(k, p)) * b(k, q);
        }
        if (std::abs(hpq) <= 1e-15 * std::sqrt(hpp * hqq) || hpp * hqq == 0.0) continue;
        converged = false;
        const Rotation r = make_rotation(hpp, hqq, hpq);
        for (std::size_t k = 0; k < b.rows(); ++k) {
          const cplx bkp = b(k, p), bkq = b(k, q);
          b(k, p) = r.c * bkp + std::conj(r.sigma) * bkq;
          b(k, q) = -r.sigma * bkp + r.c * bkq;
        }
      }
  }
  if (!converged) throw std::runtime_error("singular_values: Jacobi iteration did not converge");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < b.rows(); ++k) s += std::norm(b(k, j));
    sigma[j] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

double trace_norm(const ComplexMatrix& m) {
  const std::vector<double> sigma = singular_values(m);
  double s = 0.0;
  for (double x : sigma) s += x;
  return s;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eigensystem(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = es.values[k];
    if (lam <= 0.0) continue;
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

}  // namespace qmono
