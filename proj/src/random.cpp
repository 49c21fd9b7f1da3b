#include "qmono/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmono {

double Prng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

PureState haar_random_pure(std::vector<std::size_t> dims, std::uint64_t seed) {
  std::size_t d = 1;
  for (std::size_t x : dims) d *= x;
  Prng rng(seed);
  std::vector<cplx> amps(d);
  double norm2 = 0.0;
  for (cplx& a : amps) {
    a = cplx(rng.gaussian(), rng.gaussian());
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amps) a *= inv;
  return make_pure_state(std::move(dims), std::move(amps));
}

ComplexMatrix haar_random_isometry(std::size_t dim, std::size_t cols, Prng& rng) {
  if (cols > dim) throw std::domain_error("haar_random_isometry: more columns than rows");
  ComplexMatrix m(dim, cols);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(rng.gaussian(), rng.gaussian());
  // Modified Gram-Schmidt; positive diagonal of R makes the draw Haar.
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) -= proj * m(i, k);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(m(i, j));
    if (norm2 == 0.0) throw std::runtime_error("haar_random_isometry: degenerate draw");
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) *= inv;
  }
  return m;
}

ComplexMatrix haar_random_unitary(std::size_t dim, Prng& rng) {
  return haar_random_isometry(dim, dim, rng);
}

DensityMatrix random_mixed_state(std::vector<std::size_t> dims, std::uint64_t seed) {
  std::vector<std::size_t> doubled = dims;
  doubled.insert(doubled.end(), dims.begin(), dims.end());
  const PureState psi = haar_random_pure(std::move(doubled), seed);
  std::vector<std::size_t> keep(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) keep[i] = i;
  return partial_trace(density_of(psi), keep);
}

}  // namespace qmono
