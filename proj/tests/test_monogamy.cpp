#include <doctest.h>

#include <cmath>

#include "qmono/monogamy.hpp"
#include "qmono/random.hpp"

using namespace qmono;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ExponentPair conc_pair(double beta, double alpha) {
  return make_exponent_pair(beta, alpha, Regime::concurrence_type);
}
ExponentPair eof_pair(double beta, double alpha) {
  return make_exponent_pair(beta, alpha, Regime::eof_type);
}

}  // namespace

TEST_CASE("exponent pair validation") {
  CHECK_NOTHROW((void)conc_pair(0.0, 2.0));
  CHECK_NOTHROW((void)conc_pair(2.0, 2.0));
  CHECK_NOTHROW((void)eof_pair(1.0, kSqrt2));
  CHECK_THROWS_AS((void)conc_pair(-0.1, 2.0), std::domain_error);
  CHECK_THROWS_AS((void)conc_pair(2.5, 2.0), std::domain_error);   // beta > alpha
  CHECK_THROWS_AS((void)conc_pair(1.0, 1.9), std::domain_error);   // alpha below 2
  CHECK_THROWS_AS((void)eof_pair(1.0, 1.2), std::domain_error);    // alpha below sqrt(2)
  CHECK(std::abs(conc_pair(1.0, 2.0).weight() - (kSqrt2 - 1.0)) < 1e-15);
}

TEST_CASE("lemma 1 gap") {
  CHECK(std::abs(lemma1_gap(1.0, 7.3)) < 1e-12);   // equality at x = 1
  CHECK(std::abs(lemma1_gap(0.37, 1.0)) < 1e-12);  // equality at t = 1
  // direct evaluation, cross-checked in long double
  const long double exact =
      std::sqrt((long double)5.0) - 1.0L - (std::sqrt((long double)2.0) - 1.0L) * 2.0L;
  CHECK(std::abs(lemma1_gap(0.5, 4.0) - static_cast<double>(exact)) < 1e-14);
  CHECK(std::abs(lemma1_gap(0.5, 4.0) - 0.40764085275359960) < 1e-14);

  CHECK_THROWS_AS((void)lemma1_gap(1.2, 2.0), std::domain_error);
  CHECK_THROWS_AS((void)lemma1_gap(0.5, 0.5), std::domain_error);

  // quasi-random scan of the admissible box
  double worst = 1.0;
  double u = 0.0, v = 0.0;
  for (int k = 0; k < 100000; ++k) {
    u = std::fmod(u + 0.7548776662466927, 1.0);
    v = std::fmod(v + 0.5698402909980532, 1.0);
    worst = std::min(worst, lemma1_gap(u, 1.0 + 999.0 * v));
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("lemma 2 gap") {
  CHECK(lemma2_gap(0.0, 0.0, eof_pair(1.0, kSqrt2)) == 0.0);

  // x = y at beta = alpha = sqrt(2)
  const double x = 0.5;
  const double direct = std::pow(f_of(2.0 * x * x), kSqrt2) - 2.0 * std::pow(f_of(x * x), kSqrt2);
  CHECK(std::abs(lemma2_gap(x, x, eof_pair(kSqrt2, kSqrt2)) - direct) < 1e-12);
  CHECK(lemma2_gap(x, x, eof_pair(kSqrt2, kSqrt2)) >= 0.0);

  // W-state marginals reproduce the tripartite EoF residual at beta=1, alpha=sqrt(2)
  const double w = 2.0 / 3.0;
  CHECK(std::abs(lemma2_gap(w, w, eof_pair(1.0, kSqrt2)) - 0.020328059558992793) < 1e-9);

  CHECK_THROWS_AS((void)lemma2_gap(0.8, 0.2, eof_pair(1.0, kSqrt2)), std::domain_error);
  CHECK_THROWS_AS((void)lemma2_gap(0.9, 0.9, eof_pair(1.0, kSqrt2)), std::domain_error);
  CHECK_THROWS_AS((void)lemma2_gap(0.1, 0.2, conc_pair(1.0, 2.0)), std::domain_error);

  // quasi-random scan of the admissible region
  double worst = 1.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  for (int k = 0; k < 100000; ++k) {
    a = std::fmod(a + 0.8566748838545029, 1.0);
    b = std::fmod(b + 0.7338918566271259, 1.0);
    c = std::fmod(c + 0.6287067210378086, 1.0);
    d = std::fmod(d + 0.5385972572236101, 1.0);
    const double y = a;
    const double x = b * std::min(y, std::sqrt(std::max(0.0, 1.0 - y * y)));
    const double alpha = kSqrt2 + 8.0 * c;
    const double beta = alpha * d;
    worst = std::min(worst, lemma2_gap(x, y, eof_pair(beta, alpha)));
  }
  CHECK(worst >= -1e-10);
}

TEST_CASE("tripartite residual branches and pinned values") {
  // both pairwise zero: lhs survives
  const MonogamyReport zero = tripartite_residual(0.0, 0.0, 0.8, conc_pair(1.3, 2.0),
                                                  Measure::concurrence);
  CHECK(zero.rhs == 0.0);
  CHECK(zero.residual == doctest::Approx(std::pow(0.8, 1.3)).epsilon(1e-12));

  // reference-state values at beta=1, alpha=2 (larger value takes the weight)
  const double c_ab = 3.0 * std::sqrt(6.0) / 20.0, c_ac = std::sqrt(2.0) / 4.0;
  const MonogamyReport rep =
      tripartite_residual(c_ab, c_ac, std::sqrt(2.0) / 2.0, conc_pair(1.0, 2.0),
                          Measure::concurrence);
  CHECK(rep.branch == "2");  // c_ab > c_ac here
  CHECK(std::abs(rep.residual - 0.201361609740087289) < 1e-12);

  // swapped arguments give branch 1 and the same residual
  const MonogamyReport swapped =
      tripartite_residual(c_ac, c_ab, std::sqrt(2.0) / 2.0, conc_pair(1.0, 2.0),
                          Measure::concurrence);
  CHECK(swapped.branch == "1");
  CHECK(std::abs(swapped.residual - rep.residual) < 1e-15);

  // ties take branch 1
  CHECK(tripartite_residual(0.3, 0.3, 0.9, conc_pair(1.0, 2.0), Measure::concurrence).branch ==
        "1");

  // W-state EoF triple
  const MonogamyReport w = tripartite_residual(0.550047759582757441, 0.550047759582757441,
                                               0.918295834054489515, eof_pair(1.0, kSqrt2),
                                               Measure::eof);
  CHECK(std::abs(w.residual - 0.020328059558992793) < 1e-12);
  CHECK(std::abs(w.lhs - w.rhs - w.residual) < 1e-18);

  CHECK_THROWS_AS(
      (void)tripartite_residual(-0.1, 0.2, 0.5, conc_pair(1.0, 2.0), Measure::concurrence),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)tripartite_residual(0.1, 0.2, 0.5, conc_pair(1.0, 2.0), Measure::eof),
      std::domain_error);
}

TEST_CASE("tripartite residual is nonnegative on Haar samples for every measure") {
  const std::vector<Measure> measures = {Measure::concurrence, Measure::negativity, Measure::cren,
                                         Measure::eof};
  Prng rng(555);
  for (int it = 0; it < 300; ++it) {
    const PureState psi = haar_random_pure({2, 2, 2}, 100000 + it);
    for (Measure m : measures) {
      const StateValues v = measure_values(psi, m);
      const double alpha =
          (regime_for(m) == Regime::eof_type ? kSqrt2 : 2.0) + 6.0 * rng.uniform();
      const double beta = alpha * rng.uniform();
      const ExponentPair e = make_exponent_pair(beta, alpha, m);
      const MonogamyReport rep = tripartite_residual(v.pairwise[0], v.pairwise[1], v.total, e, m);
      CHECK(rep.residual >= -1e-9);
    }
  }
}

TEST_CASE("weight decreases in alpha, residual does not") {
  const double c_ab = 0.53, c_ac = 0.31, total = 0.81;
  double prev_w = 10.0, prev_r = -10.0;
  for (double alpha = 2.0; alpha <= 10.01; alpha += 0.25) {
    const ExponentPair e = conc_pair(1.2, alpha);
    CHECK(e.weight() < prev_w);
    prev_w = e.weight();
    const double r =
        tripartite_residual(c_ab, c_ac, total, e, Measure::concurrence).residual;
    CHECK(r >= prev_r - 1e-15);
    prev_r = r;
  }
}

TEST_CASE("chain residual") {
  // all pairwise zero
  const MonogamyReport zero =
      chain_residual({0.0, 0.0, 0.0}, 0.9, conc_pair(1.0, 2.0), 1, Measure::concurrence);
  CHECK(zero.residual == doctest::Approx(0.9).epsilon(1e-12));

  // beta = alpha: the weight collapses to 1 and the rhs is the plain power sum
  const std::vector<double> vals = {0.4, 0.2, 0.3};
  const MonogamyReport flat =
      chain_residual(vals, 0.95, conc_pair(2.0, 2.0), 1, Measure::concurrence);
  double plain = std::pow(0.95, 2.0);
  for (double v : vals) plain -= v * v;
  CHECK(std::abs(flat.residual - plain) < 1e-15);

  CHECK_THROWS_AS(
      (void)chain_residual({0.1, 0.2}, 0.5, conc_pair(1.0, 2.0), 1, Measure::concurrence),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)chain_residual({0.1, 0.2, 0.3}, 0.5, conc_pair(1.0, 2.0), 2, Measure::concurrence),
      std::domain_error);  // m > n-3
  CHECK_THROWS_AS(
      (void)chain_residual({0.1, 0.2, 0.3}, 0.5, eof_pair(1.0, 2.0), 1, Measure::concurrence),
      std::domain_error);  // regime mismatch
}

TEST_CASE("ordering certificates") {
  // W states: pairwise 2/n, all-<= prefix certified up to m = n-3
  for (std::size_t n = 4; n <= 5; ++n) {
    const OrderingCertificate cert = certify_ordering(w_state(n));
    REQUIRE(cert.pairwise.size() == n - 1);
    for (double c : cert.pairwise) CHECK(std::abs(c - 2.0 / static_cast<double>(n)) < 1e-9);
    REQUIRE(cert.best_m.has_value());
    CHECK(*cert.best_m == n - 3);
    CHECK(cert.status.back() == OrderingStatus::certified_both);
  }

  // GHZ: every pairwise concurrence vanishes, certification degenerates
  const OrderingCertificate ghz = certify_ordering(ghz_state(4));
  for (double c : ghz.pairwise) CHECK(c < 1e-10);
  CHECK(ghz.best_m.has_value());

  // product of A with a GHZ on the rest: pairwise zero, certification degenerates
  {
    std::vector<cplx> amps(16, 0.0);
    amps[0] = std::sqrt(0.5);   // |0>|000>
    amps[7] = std::sqrt(0.5);   // |0>|111>
    const PureState psi = make_pure_state({2, 2, 2, 2}, amps);
    const OrderingCertificate cert = certify_ordering(psi);
    for (double c : cert.pairwise) CHECK(c < 1e-10);
    CHECK(cert.best_m.has_value());
  }

  // B1 factored off in |+>, Bell pair on (A, B2): the position-1 tail marginal
  // is pure, so that comparison is decided exactly rather than bounded
  {
    std::vector<cplx> amps(16, 0.0);
    amps[0] = 0.5;    // |0 0 0 0>
    amps[4] = 0.5;    // |0 1 0 0>
    amps[10] = 0.5;   // |1 0 1 0>
    amps[14] = 0.5;   // |1 1 1 0>
    const PureState psi = make_pure_state({2, 2, 2, 2}, amps);
    const OrderingCertificate cert = certify_ordering(psi);
    CHECK(cert.pairwise[0] < 1e-10);
    CHECK(std::abs(cert.pairwise[1] - 1.0) < 1e-10);
    CHECK(cert.status[0] == OrderingStatus::certified_le);
    CHECK(cert.status[1] == OrderingStatus::certified_ge);
    REQUIRE(cert.best_m.has_value());
    CHECK(*cert.best_m == 1);
  }

  CHECK_THROWS_AS((void)certify_ordering(w_state(3)), std::domain_error);
}

TEST_CASE("certified chains keep nonnegative residuals") {
  std::size_t certified = 0, undecided = 0;
  for (int it = 0; it < 300; ++it) {
    const PureState psi = haar_random_pure({2, 2, 2, 2}, 777000 + it);
    const CheckResult conc = check_pure_state(psi, Measure::concurrence, conc_pair(1.0, 2.0));
    const CheckResult eofr = check_pure_state(psi, Measure::eof, eof_pair(1.0, kSqrt2));
    if (conc.report.certified) {
      ++certified;
      CHECK(conc.report.residual >= -1e-9);
      CHECK(eofr.report.residual >= -1e-9);
    } else {
      ++undecided;
      CHECK(conc.report.note.find("m=") != std::string::npos);
    }
  }
  CHECK(certified > 0);  // the campaign must actually exercise the theorem
  INFO("undecided fraction ", static_cast<double>(undecided) / 300.0);
}

TEST_CASE("polygamy residuals") {
  // W state, concurrence, alpha = -1: 2 * (3/2) - 3/(2 sqrt 2)
  const StateValues w = measure_values(w_state(3), Measure::concurrence);
  const double expected = 3.0 - 3.0 / (2.0 * kSqrt2);
  CHECK(std::abs(polygamy_residual(w.pairwise, w.total, -1.0, Measure::concurrence) - expected) <
        1e-9);

  // alpha = 0 counts the nonzero pairwise terms minus one
  CHECK(std::abs(polygamy_residual(w.pairwise, w.total, 0.0, Measure::concurrence) - 1.0) <
        1e-12);

  // reference three-qubit state at alpha = -2
  const double c_ab = 3.0 * std::sqrt(6.0) / 20.0, c_ac = std::sqrt(2.0) / 4.0;
  CHECK(polygamy_residual({c_ab, c_ac}, std::sqrt(0.5), -2.0, Measure::concurrence) > 0.0);

  CHECK_THROWS_AS((void)polygamy_residual({0.0, 0.3}, 0.5, -1.0, Measure::concurrence),
                  std::domain_error);
  CHECK_THROWS_AS((void)polygamy_residual({0.2, 0.3}, 0.5, 1.0, Measure::concurrence),
                  std::domain_error);

  // Haar samples with every pairwise concurrence bounded away from zero
  int accepted = 0;
  for (int it = 0; accepted < 100 && it < 5000; ++it) {
    const StateValues v = measure_values(haar_random_pure({2, 2, 2}, 31000 + it),
                                         Measure::concurrence);
    if (v.pairwise[0] < 1e-3 || v.pairwise[1] < 1e-3) continue;
    ++accepted;
    for (double alpha : {-2.0, -1.0, -0.1, 0.0})
      CHECK(polygamy_residual(v.pairwise, v.total, alpha, Measure::concurrence) > 0.0);
  }
  CHECK(accepted == 100);

  // four-qubit samples, same hypothesis filter
  int accepted4 = 0;
  for (int it = 0; accepted4 < 50 && it < 5000; ++it) {
    const StateValues v = measure_values(haar_random_pure({2, 2, 2, 2}, 37000 + it),
                                         Measure::concurrence);
    bool all = true;
    for (double c : v.pairwise) all = all && c > 1e-3;
    if (!all) continue;
    ++accepted4;
    for (double alpha : {-2.0, -1.0, -0.1, 0.0})
      CHECK(polygamy_residual(v.pairwise, v.total, alpha, Measure::concurrence) > 0.0);
  }
  CHECK(accepted4 == 50);
}

TEST_CASE("three-qubit check reports are certified tripartite evaluations") {
  const PureState psi = haar_random_pure({2, 2, 2}, 90909);
  const CheckResult res = check_pure_state(psi, Measure::concurrence, conc_pair(1.0, 2.0));
  CHECK(res.report.certified);
  CHECK((res.report.branch == "1" || res.report.branch == "2"));
  CHECK(!res.certificate.has_value());
  CHECK(res.values.pairwise.size() == 2);
}
