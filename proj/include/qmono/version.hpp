#pragma once

#include <string_view>

namespace qmono {

inline constexpr std::string_view kVersion = "0.1.0";

// Conventions every JSON report carries.
inline constexpr std::string_view kNegativityConvention = "trace_norm_minus_one";  // doubled
inline constexpr std::string_view kEntropyConvention = "minus_tr_rho_log2_rho";

}  // namespace qmono
