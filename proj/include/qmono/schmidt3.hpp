#pragma once

#include <array>

#include "qmono/monogamy.hpp"
#include "qmono/states.hpp"

namespace qmono {

/// Three-qubit generalized Schmidt form
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>,
/// l_i >= 0, sum l_i^2 = 1.
struct SchmidtParams {
  std::array<double, 5> lambda{1.0, 0.0, 0.0, 0.0, 0.0};
  double phi = 0.0;
};

/// Angles in [0, pi/2] mapping to exactly normalized amplitudes:
/// l0 = cos t0, l1 = sin t0 cos t1, l2 = sin t0 sin t1 cos t2,
/// l3 = sin t0 sin t1 sin t2 cos t3, l4 = sin t0 sin t1 sin t2 sin t3.
struct ThetaParams {
  std::array<double, 4> theta{0.0, 0.0, 0.0, 0.0};
};

void validate(const SchmidtParams& p);
SchmidtParams from_theta(const ThetaParams& t);
PureState build_state(const SchmidtParams& p);

/// Closed-form concurrences of the family. The A|BC value is
/// 2 l0 sqrt(l2^2 + l3^2 + l4^2). Pairing of the pairwise values follows the
/// marginals of the ket above: |000> and |110> form the AB coherence, so
/// c_ab = 2 l0 l3, and |000> with |101> gives c_ac = 2 l0 l2.
struct PairwiseConcurrences {
  double c_abc = 0.0;
  double c_ab = 0.0;
  double c_ac = 0.0;
};

PairwiseConcurrences closed_form_concurrences(const SchmidtParams& p);

/// Tripartite residual built from the closed forms; the larger pairwise value
/// receives the (2^(beta/alpha) - 1) weight. Supported measures: concurrence,
/// cren (identical values) and eof (through f of the squares).
double residual_u(const SchmidtParams& p, const ExponentPair& e, Measure measure);

}  // namespace qmono
