#include "qmono/schmidt3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmono {

void validate(const SchmidtParams& p) {
  double sum2 = 0.0;
  for (double l : p.lambda) {
    if (!(l >= 0.0)) throw std::domain_error("schmidt params: amplitudes must be >= 0");
    sum2 += l * l;
  }
  if (std::abs(sum2 - 1.0) > 1e-12)
    throw std::domain_error("schmidt params: squared amplitudes must sum to 1 within 1e-12");
  if (!std::isfinite(p.phi)) throw std::domain_error("schmidt params: non-finite phase");
}

SchmidtParams from_theta(const ThetaParams& t) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  for (double a : t.theta)
    if (!(a >= 0.0 && a <= kHalfPi))
      throw std::domain_error("theta params: angles must lie in [0, pi/2]");
  const double s0 = std::sin(t.theta[0]), s1 = std::sin(t.theta[1]), s2 = std::sin(t.theta[2]);
  SchmidtParams p;
  p.lambda[0] = std::cos(t.theta[0]);
  p.lambda[1] = s0 * std::cos(t.theta[1]);
  p.lambda[2] = s0 * s1 * std::cos(t.theta[2]);
  p.lambda[3] = s0 * s1 * s2 * std::cos(t.theta[3]);
  p.lambda[4] = s0 * s1 * s2 * std::sin(t.theta[3]);
  return p;
}

PureState build_state(const SchmidtParams& p) {
  validate(p);
  std::vector<cplx> amps(8, 0.0);
  amps[0] = p.lambda[0];                                                    // |000>
  amps[4] = p.lambda[1] * cplx(std::cos(p.phi), std::sin(p.phi));          // |100>
  amps[5] = p.lambda[2];                                                    // |101>
  amps[6] = p.lambda[3];                                                    // |110>
  amps[7] = p.lambda[4];                                                    // |111>
  return make_pure_state({2, 2, 2}, std::move(amps));
}

PairwiseConcurrences closed_form_concurrences(const SchmidtParams& p) {
  validate(p);
  const double l0 = p.lambda[0], l2 = p.lambda[2], l3 = p.lambda[3], l4 = p.lambda[4];
  PairwiseConcurrences c;
  c.c_abc = 2.0 * l0 * std::sqrt(l2 * l2 + l3 * l3 + l4 * l4);
  c.c_ab = 2.0 * l0 * l3;
  c.c_ac = 2.0 * l0 * l2;
  return c;
}

double residual_u(const SchmidtParams& p, const ExponentPair& e, Measure measure) {
  const PairwiseConcurrences c = closed_form_concurrences(p);
  switch (measure) {
    case Measure::concurrence:
    case Measure::cren:  // identical values on this family
      return tripartite_residual(c.c_ab, c.c_ac, c.c_abc, e, measure).residual;
    case Measure::eof:
      // Every cut puts a single qubit on one side, so E = f(C^2) throughout.
      return tripartite_residual(f_of(std::min(1.0, c.c_ab * c.c_ab)),
                                 f_of(std::min(1.0, c.c_ac * c.c_ac)),
                                 f_of(std::min(1.0, c.c_abc * c.c_abc)), e, measure)
          .residual;
    case Measure::negativity:
      throw std::domain_error(
          "residual_u: no closed form for mixed-marginal negativity; compute through the "
          "measures pipeline instead");
  }
  throw std::domain_error("residual_u: unknown measure");
}

}  // namespace qmono
