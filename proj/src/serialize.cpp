#include "hypercp/serialize.hpp"

namespace hypercp {

namespace {

void attach_labels(nlohmann::json& j, const std::vector<std::string>& labels) {
  if (!labels.empty()) j["labels"] = labels;
}

}  // namespace

nlohmann::json to_json(const SolverResult& r, const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["scores"] = r.scores;
  j["eigenvalue"] = r.eigenvalue;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["residuals"] = r.residual_trace;
  if (r.isolated_nodes > 0) j["isolated_nodes"] = r.isolated_nodes;
  attach_labels(j, labels);
  return j;
}

SolverResult solver_result_from_json(const nlohmann::json& j) {
  SolverResult r;
  try {
    r.scores = j.at("scores").get<std::vector<double>>();
    r.eigenvalue = j.value("eigenvalue", 0.0);
    r.iterations = j.value("iterations", 0);
    r.converged = j.value("converged", false);
    r.residual_trace = j.value("residuals", std::vector<double>{});
    r.isolated_nodes = j.value("isolated_nodes", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed score JSON: ") + e.what());
  }
  return r;
}

nlohmann::json to_json(const PowerIterationResult& r, const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["scores"] = r.scores;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["residuals"] = r.residual_trace;
  attach_labels(j, labels);
  return j;
}

nlohmann::json to_json(const UmhsResult& r, std::size_t n, const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["scores"] = ranking_to_scores(r.ranking, n);
  j["ranking"] = r.ranking;
  std::vector<std::string> hs;
  for (NodeId v : r.hitting_set) hs.push_back(labels.empty() ? std::to_string(v) : labels[v]);
  j["hitting_set"] = hs;
  j["set_size"] = r.hitting_set.size();
  j["restart_sizes"] = r.restart_sizes;
  attach_labels(j, labels);
  return j;
}

nlohmann::json to_json(const SolverConfig& cfg) {
  return {{"p", cfg.p},   {"q", cfg.q},               {"xi", to_string(cfg.xi)},
          {"tol", cfg.tol}, {"max_iter", cfg.max_iter}, {"seed", cfg.seed}};
}

nlohmann::json to_json(const GeneratorConfig& cfg) {
  nlohmann::json j = {{"n", cfg.n},       {"max_size", cfg.max_size}, {"q_mu", cfg.q_mu},
                      {"xi", to_string(cfg.xi)}, {"seed", cfg.seed},   {"budget", cfg.budget}};
  if (!cfg.planted_ranks.empty()) j["planted_ranks"] = cfg.planted_ranks;
  return j;
}

}  // namespace hypercp
