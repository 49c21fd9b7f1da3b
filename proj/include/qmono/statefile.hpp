#pragma once

#include <string>
#include <variant>

#include "qmono/states.hpp"

namespace qmono {

using LoadedState = std::variant<PureState, DensityMatrix>;

/// Parses the UTF-8 JSON state format:
///   {"kind": "pure",  "dims": [2,2], "amplitudes": [[re,im], ...]}
///   {"kind": "mixed", "dims": [2,2], "matrix": [[[re,im], ...], ...]}
/// Validates the corresponding core-type invariants and throws
/// std::invalid_argument / std::domain_error with field diagnostics.
LoadedState parse_state_json(const std::string& text);
LoadedState load_state_file(const std::string& path);

std::size_t num_subsystems(const LoadedState& state);

/// "0|1,2" -> side A {0}, side B {1,2}. A bare "0" takes the complement.
Bipartition parse_cut(const std::string& text, std::size_t n_subsystems);

}  // namespace qmono
