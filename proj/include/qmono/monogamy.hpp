#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmono/measures.hpp"
#include "qmono/states.hpp"

namespace qmono {

enum class Regime { concurrence_type, eof_type };

Regime regime_for(Measure m);
std::string to_string(Regime r);

/// Exponent pair (beta, alpha) with 0 <= beta <= alpha and
/// alpha >= 2 (concurrence-type) or alpha >= sqrt(2) (eof-type).
struct ExponentPair {
  double beta = 1.0;
  double alpha = 2.0;
  Regime regime = Regime::concurrence_type;

  /// 2^(beta/alpha) - 1, the discount applied to the larger pairwise term.
  double weight() const;
};

ExponentPair make_exponent_pair(double beta, double alpha, Regime regime);
ExponentPair make_exponent_pair(double beta, double alpha, Measure measure);

/// One inequality evaluation. residual = lhs - rhs exactly as stored.
struct MonogamyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::string branch;      // "1"/"2" for tripartite, "m=<k>" for chains
  bool certified = true;   // false when an ordering hypothesis could not be verified
  std::string note;
};

/// (1+t)^x - 1 - (2^x - 1) t^x for x in [0,1], t >= 1. Nonnegative.
double lemma1_gap(double x, double t);

/// f^beta(x^2+y^2) - f^beta(x^2) - (2^(beta/alpha)-1) f^beta(y^2)
/// for 0 <= x <= y <= 1, x^2 + y^2 <= 1, eof-type exponents. Nonnegative.
double lemma2_gap(double x, double y, const ExponentPair& e);

/// total^beta >= v_small^beta + (2^(beta/alpha)-1) v_large^beta.
/// Branch 1 when v_ab <= v_ac (weight on v_ac), branch 2 otherwise; ties take
/// branch 1. Values below 1e-12 are flushed to zero before taking powers.
MonogamyReport tripartite_residual(double v_ab, double v_ac, double total, const ExponentPair& e,
                                   Measure measure);

/// n-qubit chain right-hand side with r = 2^(beta/alpha) - 1:
///   sum_{i=1..m} r^{i-1} v_i^beta
/// + r^{m+1} sum_{i=m+1..n-2} v_i^beta
/// + r^m v_{n-1}^beta.
/// pairwise holds v_1..v_{n-1} (n-1 >= 3), split index 1 <= m <= n-3.
MonogamyReport chain_residual(const std::vector<double>& pairwise, double total,
                              const ExponentPair& e, std::size_t m, Measure measure);

enum class OrderingStatus { certified_le, certified_ge, certified_both, undecided };
std::string to_string(OrderingStatus s);

/// Certificate for the chain ordering hypothesis
///   C_{A B_i} <= C_{A|B_{i+1}..B_{n-1}} (prefix) and >= (suffix).
/// Position i (1-based, i = 1..n-2) compares the pairwise concurrence with the
/// one-to-tail concurrence. The tail value is exact when the tail marginal is
/// a two-qubit state or pure; otherwise only the monogamy lower bound
/// sqrt(sum_{j>i} C_{AB_j}^2) is available, which can certify <= but never >=.
struct OrderingCertificate {
  std::vector<double> pairwise;            // Wootters values C_{AB_1}..C_{AB_{n-1}}
  std::vector<OrderingStatus> status;      // index k holds position i = k+1
  std::optional<std::size_t> best_m;       // largest certified split in [1, n-3]
};

OrderingCertificate certify_ordering(const PureState& psi);

/// sum_i v_i^alpha - total^alpha for alpha <= 0; strictly positive under the
/// hypothesis that every pairwise value is nonzero.
double polygamy_residual(const std::vector<double>& pairwise, double total, double alpha,
                         Measure measure);

/// Pairwise values v(A,B_i) and the one-to-rest value for an n-qubit pure state.
struct StateValues {
  std::vector<double> pairwise;
  double total = 0.0;
};

StateValues measure_values(const PureState& psi, Measure measure);

/// Full evaluation of one pure state: tripartite for n = 3; for n >= 4 the
/// chain at the largest certified split (or nominally at m = n-3, flagged
/// uncertified, when the hypothesis could not be verified).
struct CheckResult {
  MonogamyReport report;
  StateValues values;
  std::optional<OrderingCertificate> certificate;  // present for n >= 4
};

CheckResult check_pure_state(const PureState& psi, Measure measure, const ExponentPair& e);

}  // namespace qmono
