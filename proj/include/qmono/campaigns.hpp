#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qmono/monogamy.hpp"
#include "qmono/schmidt3.hpp"

namespace qmono {

// ---------------------------------------------------------------------------
// repro: built-in reference cases.
//   1  theta-grid scan of the Schmidt family (residual must stay >= -1e-9)
//   2  fixed Schmidt-form state, concurrence values and residual
//   3  W state, entanglement-of-formation values and bound
// ---------------------------------------------------------------------------

struct ReproCheck {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;   // |computed - reference| <= tolerance, unless lower_bound
  bool lower_bound = false; // pass when computed >= reference
  double deviation = 0.0;
  bool pass = false;
};

struct ReproReport {
  int case_id = 0;
  std::vector<ReproCheck> checks;
  std::size_t grid_points = 0;  // case 1
  bool pass = false;
};

ReproReport run_repro_case(int case_id);

/// Parameters of the fixed Schmidt-form reference state used by case 2 and the
/// "example2" sweep target.
SchmidtParams repro_case2_params();

// ---------------------------------------------------------------------------
// sweep: residual surface over an exponent grid, CSV rows beta,alpha,residual.
// ---------------------------------------------------------------------------

struct SweepSpec {
  Measure measure = Measure::concurrence;
  double beta_min = 0.0, beta_max = 0.0, beta_step = 1.0;
  double alpha_min = 0.0, alpha_max = 0.0, alpha_step = 1.0;
  std::string target;  // "example2" | "example3" | path to a state file
};

struct SweepSummary {
  std::size_t points = 0;
  double min_residual = 0.0, min_beta = 0.0, min_alpha = 0.0;
};

/// Validates the spec, resolves the target to a (v_ab, v_ac, total) triple,
/// writes the CSV (12 significant digits) and returns the grid summary.
SweepSummary run_sweep(const SweepSpec& spec, std::ostream& csv);

/// Grid values min, min+step, ..., capped at max (inclusive within rounding).
std::vector<double> grid_values(double min, double max, double step);

// ---------------------------------------------------------------------------
// sample: seeded Haar campaigns for the tripartite and chain inequalities.
// ---------------------------------------------------------------------------

struct SampleSpec {
  std::size_t qubits = 3;  // 3..6
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  Measure measure = Measure::concurrence;
  double beta = 1.0;
  double alpha = 2.0;
};

struct SampleSummary {
  std::size_t certified = 0;
  std::size_t undecided = 0;
  std::size_t violations = 0;  // certified residuals below -1e-9
  bool has_worst = false;      // false when no certified trial exists
  double worst_residual = 0.0;
  std::size_t worst_trial = 0;
  std::uint64_t worst_seed = 0;
};

SampleSummary run_sample(const SampleSpec& spec);

/// %.12g formatting used for all CSV fields.
std::string format_sig12(double v);

}  // namespace qmono
