#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hypercp/baselines.hpp"
#include "hypercp/generator.hpp"
#include "hypercp/solver.hpp"

namespace hypercp {

// {scores, eigenvalue, iterations, converged, residuals}; `labels` is added
// when non-empty so scores can be matched back to external node names.
nlohmann::json to_json(const SolverResult& r, const std::vector<std::string>& labels = {});
SolverResult solver_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerIterationResult& r, const std::vector<std::string>& labels = {});

// Score JSON plus {hitting_set: [labels], set_size}.
nlohmann::json to_json(const UmhsResult& r, std::size_t n, const std::vector<std::string>& labels);

nlohmann::json to_json(const SolverConfig& cfg);
nlohmann::json to_json(const GeneratorConfig& cfg);

}  // namespace hypercp
