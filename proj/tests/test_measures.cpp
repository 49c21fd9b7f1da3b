#include <doctest.h>

#include <cmath>

#include "qmono/campaigns.hpp"
#include "qmono/linalg.hpp"
#include "qmono/measures.hpp"
#include "qmono/random.hpp"
#include "qmono/schmidt3.hpp"

using namespace qmono;

namespace {

PureState apply_unitary(const PureState& psi, const ComplexMatrix& u) {
  std::vector<cplx> out(psi.amplitudes.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += u(i, j) * psi.amplitudes[j];
  return PureState{psi.dims, std::move(out)};
}

DensityMatrix conjugate_by(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix{rho.dims, u * rho.matrix * u.adjoint()};
}

ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

const double kExactH13 = std::log2(3.0) - 2.0 / 3.0;  // binary entropy at 1/3

}  // namespace

TEST_CASE("pure-state concurrence") {
  const PureState prod = make_pure_state({2, 2}, {1.0, 0.0, 0.0, 0.0});
  CHECK(concurrence_pure(prod, make_bipartition({0}, 2)) < 1e-12);

  CHECK(std::abs(concurrence_pure(bell_phi_plus(), make_bipartition({0}, 2)) - 1.0) < 1e-12);

  const PureState case2 = build_state(repro_case2_params());
  CHECK(std::abs(concurrence_pure(case2, make_bipartition({0}, 3)) - std::sqrt(2.0) / 2.0) < 1e-12);

  CHECK_THROWS_AS((void)concurrence_pure(bell_phi_plus(), Bipartition{{0, 1}, {}}),
                  std::domain_error);
}

TEST_CASE("two-qubit concurrence closed form") {
  const DensityMatrix a = random_mixed_state({2}, 31);
  const DensityMatrix b = random_mixed_state({2}, 32);
  DensityMatrix prod{{2, 2}, kron(a.matrix, b.matrix)};
  CHECK(concurrence_two_qubit(prod) < 1e-10);

  const DensityMatrix case2 = density_of(build_state(repro_case2_params()));
  // Coefficient pairing of the Schmidt family: |000>,|110> carry the AB Bell
  // pair, so Tr_C leaves concurrence 2 l0 l3; Tr_B leaves 2 l0 l2.
  const double c_ab = concurrence_two_qubit(partial_trace(case2, {0, 1}));
  const double c_ac = concurrence_two_qubit(partial_trace(case2, {0, 2}));
  CHECK(std::abs(c_ab - 3.0 * std::sqrt(6.0) / 20.0) < 1e-10);
  CHECK(std::abs(c_ac - std::sqrt(2.0) / 4.0) < 1e-10);

  const DensityMatrix w_ab = partial_trace(density_of(w_state(3)), {0, 1});
  CHECK(std::abs(concurrence_two_qubit(w_ab) - 2.0 / 3.0) < 1e-10);

  CHECK_THROWS_AS((void)concurrence_two_qubit(random_mixed_state({2}, 1)), std::domain_error);
}

TEST_CASE("two-qubit concurrence agrees with the sqrt(rho) route") {
  const ComplexMatrix yy = kron(sigma_y(), sigma_y());
  for (int it = 0; it < 100; ++it) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 4200 + it);
    const ComplexMatrix root = sqrt_psd(rho.matrix);
    const std::vector<double> mu = hermitian_eigenvalues(root * (yy * rho.matrix.conjugate() * yy) * root);
    double c = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      const double s = std::sqrt(std::max(0.0, mu[k]));
      c += (k == 0 ? s : -s);
    }
    c = std::max(0.0, c);
    CHECK(std::abs(c - concurrence_two_qubit(rho)) < 1e-7);
  }
}

TEST_CASE("wootters matches the pure-state formula on two-qubit pure states") {
  for (int it = 0; it < 200; ++it) {
    const PureState psi = haar_random_pure({2, 2}, 600 + it);
    const double via_purity = concurrence_pure(psi, make_bipartition({0}, 2));
    const double via_wootters = concurrence_two_qubit(density_of(psi));
    CHECK(std::abs(via_purity - via_wootters) < 1e-8);
  }
}

TEST_CASE("negativity") {
  const DensityMatrix a = random_mixed_state({2}, 11);
  const DensityMatrix b = random_mixed_state({2}, 12);
  DensityMatrix prod{{2, 2}, kron(a.matrix, b.matrix)};
  CHECK(negativity(prod, 0) < 1e-10);

  CHECK(std::abs(negativity(density_of(bell_phi_plus()), 0) - 1.0) < 1e-10);

  CHECK_THROWS_AS((void)negativity(prod, 4), std::domain_error);
}

TEST_CASE("negativity equals concurrence on pure 2xd cuts") {
  for (int it = 0; it < 200; ++it) {
    const PureState psi = haar_random_pure({2, 2, 2}, 800 + it);
    const Bipartition cut = make_bipartition({0}, 3);
    CHECK(std::abs(negativity(density_of(psi), cut) - concurrence_pure(psi, cut)) < 1e-9);
  }
}

TEST_CASE("negativity never exceeds concurrence on two-qubit mixed states") {
  double worst = -1.0;
  for (int it = 0; it < 10000; ++it) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 2400 + it);
    worst = std::max(worst, negativity(rho, 0) - concurrence_two_qubit(rho));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("cren on two qubits") {
  const DensityMatrix bell = density_of(bell_phi_plus());
  CHECK(std::abs(cren_two_qubit(bell) - 1.0) < 1e-10);
  const DensityMatrix w_ab = partial_trace(density_of(w_state(3)), {0, 1});
  CHECK(std::abs(cren_two_qubit(w_ab) - 2.0 / 3.0) < 1e-10);
  for (int it = 0; it < 50; ++it) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 300 + it);
    CHECK(cren_two_qubit(rho) == concurrence_two_qubit(rho));
  }
}

TEST_CASE("binary entropy") {
  CHECK(std::abs(binary_entropy(0.5) - 1.0) < 1e-15);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(1.0 / 3.0) - kExactH13) < 1e-14);
  CHECK(std::abs(binary_entropy(1.0 / 3.0) - 0.918296) < 1e-6);
  CHECK_THROWS_AS((void)binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS((void)binary_entropy(1.01), std::domain_error);
}

TEST_CASE("f is pinned at the ends, hits the W-marginal value, and is monotone") {
  CHECK(f_of(0.0) == 0.0);
  CHECK(std::abs(f_of(1.0) - 1.0) < 1e-15);
  CHECK(std::abs(f_of(4.0 / 9.0) - 0.550048) < 1e-6);
  double prev = -1.0;
  for (int k = 0; k <= 10000; ++k) {
    const double x = static_cast<double>(k) / 10000.0;
    const double v = f_of(x);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK_THROWS_AS((void)f_of(-1e-9), std::domain_error);
  CHECK_THROWS_AS((void)f_of(1.0 + 1e-9), std::domain_error);
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(density_of(bell_phi_plus())) < 1e-10);
  DensityMatrix half{{2}, 0.5 * ComplexMatrix::identity(2)};
  CHECK(std::abs(von_neumann_entropy(half) - 1.0) < 1e-12);
  const double d[] = {2.0 / 3.0, 1.0 / 3.0};
  DensityMatrix w_a{{2}, ComplexMatrix::diagonal(d)};
  CHECK(std::abs(von_neumann_entropy(w_a) - kExactH13) < 1e-12);
}

TEST_CASE("entanglement of formation") {
  const DensityMatrix a = random_mixed_state({2}, 21);
  const DensityMatrix b = random_mixed_state({2}, 22);
  DensityMatrix prod{{2, 2}, kron(a.matrix, b.matrix)};
  CHECK(eof_two_qubit(prod) < 1e-9);
  CHECK(std::abs(eof_two_qubit(density_of(bell_phi_plus())) - 1.0) < 1e-10);
  const DensityMatrix w_ab = partial_trace(density_of(w_state(3)), {0, 1});
  CHECK(std::abs(eof_two_qubit(w_ab) - 0.550048) < 1e-6);

  const PureState w = w_state(3);
  CHECK(std::abs(eof_pure(w, make_bipartition({0}, 3)) - 0.918296) < 1e-6);
  const PureState prod_pure = make_pure_state({2, 2}, {0.0, 1.0, 0.0, 0.0});
  CHECK(eof_pure(prod_pure, make_bipartition({0}, 2)) < 1e-12);

  // Schmidt symmetry of the cut
  for (int it = 0; it < 50; ++it) {
    const PureState psi = haar_random_pure({2, 2, 2}, 1500 + it);
    const double ea = eof_pure(psi, make_bipartition({0}, 3));
    const double eb = eof_pure(psi, make_bipartition({1, 2}, 3));
    CHECK(std::abs(ea - eb) < 1e-10);
  }
}

TEST_CASE("E = f(C^2) on two-qubit pure states, E >= f(C^2) on mixed") {
  for (int it = 0; it < 200; ++it) {
    const PureState psi = haar_random_pure({2, 2}, 3100 + it);
    const double entropy_route = eof_pure(psi, make_bipartition({0}, 2));
    const double c = concurrence_pure(psi, make_bipartition({0}, 2));
    CHECK(std::abs(entropy_route - f_of(std::min(1.0, c * c))) < 1e-9);
  }
  for (int it = 0; it < 200; ++it) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 3600 + it);
    const double c = concurrence_two_qubit(rho);
    CHECK(eof_two_qubit(rho) >= f_of(std::min(1.0, c * c)) - 1e-9);
  }
}

TEST_CASE("measures are invariant under local unitaries") {
  Prng rng(99);
  for (int it = 0; it < 30; ++it) {
    const ComplexMatrix u = kron(haar_random_unitary(2, rng), haar_random_unitary(2, rng));
    const DensityMatrix rho = random_mixed_state({2, 2}, 7000 + it);
    const DensityMatrix rot = conjugate_by(rho, u);
    CHECK(std::abs(concurrence_two_qubit(rho) - concurrence_two_qubit(rot)) < 1e-9);
    CHECK(std::abs(negativity(rho, 0) - negativity(rot, 0)) < 1e-9);
    CHECK(std::abs(eof_two_qubit(rho) - eof_two_qubit(rot)) < 1e-9);

    const PureState psi = haar_random_pure({2, 2}, 7500 + it);
    const PureState psirot = apply_unitary(psi, u);
    const Bipartition cut = make_bipartition({0}, 2);
    CHECK(std::abs(concurrence_pure(psi, cut) - concurrence_pure(psirot, cut)) < 1e-9);
    CHECK(std::abs(eof_pure(psi, cut) - eof_pure(psirot, cut)) < 1e-9);
  }
}

TEST_CASE("convex roof upper bound") {
  const Bipartition cut = make_bipartition({0}, 2);

  // singleton decomposition reproduces the pure value
  const DensityMatrix bell = density_of(bell_phi_plus());
  CHECK(std::abs(convex_roof_upper_bound(bell, cut, Measure::concurrence, 10, 5) - 1.0) < 1e-9);

  // rank-2 mixture of a Bell state with an orthogonal product state:
  // every fixed-rank decomposition averages to the Wootters value here,
  // which makes the estimator's gap essentially zero.
  DensityMatrix mix{{2, 2}, ComplexMatrix(4, 4)};
  {
    const double p = 0.6, r = 0.5 * p;
    mix.matrix(0, 0) = r;
    mix.matrix(0, 3) = r;
    mix.matrix(3, 0) = r;
    mix.matrix(3, 3) = r;
    mix.matrix(1, 1) = 1.0 - p;
  }
  const double exact = concurrence_two_qubit(mix);
  CHECK(std::abs(exact - 0.6) < 1e-10);
  const double ub = convex_roof_upper_bound(mix, cut, Measure::concurrence, 500, 17);
  CHECK(ub >= exact - 1e-9);
  CHECK(ub - exact < 0.02);

  // CREN roof of the same state through the negativity measure
  const double ub_n = convex_roof_upper_bound(mix, cut, Measure::negativity, 500, 18);
  CHECK(ub_n >= cren_two_qubit(mix) - 1e-9);

  // separable mixture of (orthogonal) product states; distinct weights keep
  // the eigenbasis unique, so the product decomposition is reachable.
  DensityMatrix sep{{2, 2}, ComplexMatrix(4, 4)};
  {
    // 0.6 |0+><0+| + 0.4 |1-><1-|
    const cplx zp[4] = {std::sqrt(0.5), std::sqrt(0.5), 0.0, 0.0};
    const cplx om[4] = {0.0, 0.0, std::sqrt(0.5), -std::sqrt(0.5)};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sep.matrix(i, j) = 0.6 * zp[i] * std::conj(zp[j]) + 0.4 * om[i] * std::conj(om[j]);
  }
  CHECK(convex_roof_upper_bound(sep, cut, Measure::concurrence, 500, 19) <= 0.01);

  // eof roof never undercuts the exact two-qubit EoF
  for (int it = 0; it < 5; ++it) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 8100 + it);
    const double bound = convex_roof_upper_bound(rho, cut, Measure::eof, 100, 23);
    CHECK(bound >= eof_two_qubit(rho) - 1e-9);
  }
}
