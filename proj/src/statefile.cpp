#include "qmono/statefile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmono {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("state file: " + where + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<std::size_t> parse_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw std::invalid_argument("state file: missing or empty 'dims' array");
  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() < 2)
      throw std::invalid_argument("state file: every entry of 'dims' must be an integer >= 2");
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

}  // namespace

LoadedState parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("state file: missing 'kind' (\"pure\" or \"mixed\")");
  const std::string kind = j["kind"].get<std::string>();
  const std::vector<std::size_t> dims = parse_dims(j);
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;

  if (kind == "pure") {
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
      throw std::invalid_argument("state file: pure state needs an 'amplitudes' array");
    const auto& arr = j["amplitudes"];
    if (arr.size() != total) {
      std::ostringstream os;
      os << "state file: 'amplitudes' holds " << arr.size() << " entries, expected " << total;
      throw std::invalid_argument(os.str());
    }
    std::vector<cplx> amps;
    amps.reserve(total);
    for (std::size_t k = 0; k < arr.size(); ++k)
      amps.push_back(parse_complex(arr[k], "amplitudes[" + std::to_string(k) + "]"));
    return make_pure_state(dims, std::move(amps));  // norm invariant checked here
  }

  if (kind == "mixed") {
    if (!j.contains("matrix") || !j["matrix"].is_array())
      throw std::invalid_argument("state file: mixed state needs a 'matrix' array of rows");
    const auto& rows = j["matrix"];
    if (rows.size() != total)
      throw std::invalid_argument("state file: 'matrix' row count does not match dims");
    ComplexMatrix m(total, total);
    for (std::size_t r = 0; r < total; ++r) {
      if (!rows[r].is_array() || rows[r].size() != total)
        throw std::invalid_argument("state file: 'matrix' row " + std::to_string(r) +
                                    " has the wrong length");
      for (std::size_t c = 0; c < total; ++c)
        m(r, c) = parse_complex(rows[r][c],
                                "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    DensityMatrix rho{dims, std::move(m)};
    validate_density(rho);  // Hermiticity / trace / positivity invariants
    return rho;
  }

  throw std::invalid_argument("state file: 'kind' must be \"pure\" or \"mixed\"");
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("state file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::size_t num_subsystems(const LoadedState& state) {
  return std::visit([](const auto& s) { return s.dims.size(); }, state);
}

Bipartition parse_cut(const std::string& text, std::size_t n_subsystems) {
  auto parse_list = [](const std::string& part) {
    std::vector<std::size_t> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("cut: '" + tok + "' is not a subsystem index");
      }
      if (pos != tok.size())
        throw std::invalid_argument("cut: '" + tok + "' is not a subsystem index");
      out.push_back(v);
    }
    return out;
  };

  const std::size_t bar = text.find('|');
  if (bar == std::string::npos) return make_bipartition(parse_list(text), n_subsystems);
  const std::string left = text.substr(0, bar), right = text.substr(bar + 1);
  if (right.empty()) return make_bipartition(parse_list(left), n_subsystems);
  return make_bipartition(parse_list(left), parse_list(right), n_subsystems);
}

}  // namespace qmono
