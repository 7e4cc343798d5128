#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "hypercp/baselines.hpp"
#include "hypercp/eval.hpp"
#include "hypercp/generator.hpp"
#include "hypercp/ingest.hpp"
#include "hypercp/numeric.hpp"
#include "hypercp/serialize.hpp"
#include "hypercp/solver.hpp"

namespace hypercp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

void write_atomic(const std::string& path, const std::string& contents) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

namespace {

constexpr const char* kMethods[] = {"hypernsm", "graphnsm", "borgatti-everett", "umhs"};

struct InputOptions {
  std::string edge_list;
  std::string nverts;
  std::string simplices;
  std::string times;
};

struct SolverOptions {
  double q = 10.0;
  double p = 11.0;
  std::string xi;  // empty: reciprocal, or weighted when the input has weights
  double tol = 1e-8;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  int restarts = 5;
};

struct Detection {
  std::string method;
  CoreScore scores;
  int iterations = 0;
  bool converged = true;
  double seconds = 0.0;
  json payload;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.edge_list, "Hypergraph in edge-list text format (.gz accepted)");
  cmd->add_option("--nverts", in.nverts, "Simplex sizes file (with --simplices)");
  cmd->add_option("--simplices", in.simplices, "Simplex node labels file (with --nverts)");
  cmd->add_option("--times", in.times, "Simplex timestamps file (length-checked, otherwise ignored)");
}

void add_solver_options(CLI::App* cmd, SolverOptions& s) {
  cmd->add_option("--q", s.q, "Hyperedge norm exponent q")->capture_default_str();
  cmd->add_option("--p", s.p, "Constraint norm exponent p (> q)")->capture_default_str();
  cmd->add_option("--xi", s.xi, "Edge scaling rule")
      ->check(CLI::IsMember({"reciprocal", "weighted", "unit"}));
  cmd->add_option("--tol", s.tol, "Relative step tolerance")->capture_default_str();
  cmd->add_option("--max-iter", s.max_iter, "Iteration cap")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  cmd->add_option("--restarts", s.restarts, "UMHS random restarts")->capture_default_str();
}

LabeledHypergraph load_input(const InputOptions& in) {
  if (!in.edge_list.empty()) {
    if (!in.nverts.empty() || !in.simplices.empty())
      throw Error("give either --input or --nverts/--simplices, not both");
    return read_edge_list_file(in.edge_list);
  }
  if (in.nverts.empty() || in.simplices.empty())
    throw Error("an input is required: --input FILE or --nverts FILE --simplices FILE");
  auto imported = read_simplex_stream_files(in.nverts, in.simplices, in.times);
  if (imported.dropped_singletons > 0)
    std::cerr << "hypercp: dropped " << imported.dropped_singletons << " singleton simplices\n";
  return std::move(imported.hypergraph);
}

SolverConfig solver_config(const SolverOptions& s, const Hypergraph& h) {
  SolverConfig cfg;
  cfg.p = s.p;
  cfg.q = s.q;
  cfg.xi = s.xi.empty() ? default_xi_rule(h) : parse_xi_rule(s.xi);
  cfg.tol = s.tol;
  cfg.max_iter = s.max_iter;
  cfg.seed = s.seed;
  cfg.validate();
  return cfg;
}

Detection detect(const std::string& method, const LabeledHypergraph& in, const SolverConfig& cfg,
                 int restarts) {
  Detection d;
  d.method = method;
  const auto& h = in.graph;
  auto t0 = std::chrono::steady_clock::now();
  if (method == "hypernsm") {
    auto r = hypernsm(h, cfg);
    d.scores = r.scores;
    d.iterations = r.iterations;
    d.converged = r.converged;
    d.payload = to_json(r, in.labels);
  } else if (method == "graphnsm") {
    auto r = graph_nsm(clique_expansion(h), cfg);
    d.scores = r.scores;
    d.iterations = r.iterations;
    d.converged = r.converged;
    d.payload = to_json(r, in.labels);
  } else if (method == "borgatti-everett") {
    auto r = borgatti_everett(clique_expansion(h), cfg.tol, cfg.max_iter, cfg.seed);
    d.scores = r.scores;
    d.iterations = r.iterations;
    d.converged = r.converged;
    d.payload = to_json(r, in.labels);
  } else if (method == "umhs") {
    auto r = umhs(h, restarts, cfg.seed);
    d.scores = ranking_to_scores(r.ranking, h.num_nodes());
    d.iterations = restarts;
    d.payload = to_json(r, h.num_nodes(), in.labels);
  } else {
    throw Error("unknown method '" + method + "'");
  }
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!d.converged)
    std::cerr << "hypercp: warning: " << method << " did not converge within max_iter\n";
  return d;
}

std::string scores_csv(const Detection& d, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "node,label,score\n";
  for (std::size_t i = 0; i < d.scores.size(); ++i)
    os << i << ',' << labels[i] << ',' << format_double(d.scores[i]) << '\n';
  return os.str();
}

void write_manifest(const std::string& path, const std::vector<std::string>& args,
                    const json& resolved) {
  json m;
  m["tool"] = "hypercp";
  m["version"] = "0.1.0";
  m["argv"] = args;
  m["resolved"] = resolved;
  m["threads"] = thread_count();
  write_atomic(path, m.dump(2) + "\n");
}

std::string default_manifest(const std::string& output) {
  fs::path p(output);
  return (p.has_parent_path() ? p.parent_path() / "manifest.json" : fs::path("manifest.json")).string();
}

json input_json(const InputOptions& in) {
  return {{"input", in.edge_list}, {"nverts", in.nverts}, {"simplices", in.simplices},
          {"times", in.times}};
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Core-periphery detection in hypergraphs"};
  app.name("hypercp");
  app.require_subcommand(1);

  // generate
  GeneratorConfig gen;
  std::string gen_xi = "reciprocal", gen_out, gen_manifest;
  auto* generate = app.add_subcommand("generate", "Sample a planted core-periphery hypergraph");
  generate->add_option("--n", gen.n, "Node count")->required();
  generate->add_option("--max-size", gen.max_size, "Largest hyperedge size")->required();
  generate->add_option("--q-mu", gen.q_mu, "Exponent of the smooth max mu_q")->capture_default_str();
  generate->add_option("--xi", gen_xi, "Edge scaling rule")
      ->check(CLI::IsMember({"reciprocal", "weighted", "unit"}));
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--budget", gen.budget, "Maximum number of candidate subsets")->capture_default_str();
  generate->add_option("-o,--output", gen_out, "Hypergraph output path")->required();
  generate->add_option("--manifest", gen_manifest, "Manifest path");

  // detect
  InputOptions det_in;
  SolverOptions det_opt;
  std::string det_method = "hypernsm", det_out, det_format = "json", det_manifest;
  auto* detect_cmd = app.add_subcommand("detect", "Compute core scores with one method");
  add_input_options(detect_cmd, det_in);
  add_solver_options(detect_cmd, det_opt);
  detect_cmd->add_option("-m,--method", det_method, "Detection method")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethods), std::end(kMethods))));
  detect_cmd->add_option("-o,--output", det_out, "Score output path")->required();
  detect_cmd->add_option("--format", det_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  detect_cmd->add_option("--manifest", det_manifest, "Manifest path");

  // profile
  InputOptions prof_in;
  SolverOptions prof_opt;
  std::string prof_method = "hypernsm", prof_scores, prof_out, prof_core, prof_manifest;
  bool prof_weighted = false;
  auto* profile_cmd = app.add_subcommand("profile", "Core-periphery or core-intersection profile");
  add_input_options(profile_cmd, prof_in);
  add_solver_options(profile_cmd, prof_opt);
  profile_cmd->add_option("-m,--method", prof_method, "Detection method")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethods), std::end(kMethods))));
  profile_cmd->add_option("--scores", prof_scores, "Use scores from a detect JSON instead of running a method");
  profile_cmd->add_option("--core-file", prof_core, "Planted core labels; emits the intersection profile");
  profile_cmd->add_flag("--weighted-profile", prof_weighted, "Weight hyperedges by xi(e) in gamma");
  profile_cmd->add_option("-o,--output", prof_out, "CSV output path")->required();
  profile_cmd->add_option("--manifest", prof_manifest, "Manifest path");

  // compare
  InputOptions cmp_in;
  SolverOptions cmp_opt;
  std::string cmp_dir, cmp_core;
  bool cmp_weighted = false;
  auto* compare = app.add_subcommand("compare", "Run all methods and write merged profiles and timings");
  add_input_options(compare, cmp_in);
  add_solver_options(compare, cmp_opt);
  compare->add_option("--core-file", cmp_core, "Planted core labels for the intersection profile");
  compare->add_flag("--weighted-profile", cmp_weighted, "Weight hyperedges by xi(e) in gamma");
  compare->add_option("-o,--output-dir", cmp_dir, "Output directory")->required();

  // replay
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", replay_path, "manifest.json")->required();

  std::vector<std::string> argv_store{"hypercp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*generate) {
      gen.xi = parse_xi_rule(gen_xi);
      auto s = sample(gen);
      LabeledHypergraph out{s.graph, {}};
      for (std::size_t i = 0; i < gen.n; ++i) out.labels.push_back(std::to_string(i));
      std::ostringstream text;
      write_edge_list(text, out);
      write_atomic(gen_out, text.str());
      json side;
      side["planted_perm"] = s.planted_ranks;
      side["config"] = to_json(gen);
      side["num_edges"] = s.graph.num_edges();
      write_atomic(gen_out + ".planted.json", side.dump(2) + "\n");
      write_manifest(gen_manifest.empty() ? default_manifest(gen_out) : gen_manifest, args,
                     {{"subcommand", "generate"}, {"generator", to_json(gen)}});
    } else if (*detect_cmd) {
      auto in = load_input(det_in);
      auto cfg = solver_config(det_opt, in.graph);
      auto d = detect(det_method, in, cfg, det_opt.restarts);
      write_atomic(det_out, det_format == "json" ? d.payload.dump(2) + "\n" : scores_csv(d, in.labels));
      write_manifest(det_manifest.empty() ? default_manifest(det_out) : det_manifest, args,
                     {{"subcommand", "detect"},
                      {"method", det_method},
                      {"solver", to_json(cfg)},
                      {"restarts", det_opt.restarts},
                      {"inputs", input_json(det_in)}});
    } else if (*profile_cmd) {
      auto in = load_input(prof_in);
      auto cfg = solver_config(prof_opt, in.graph);
      CoreScore scores;
      std::string label = prof_method;
      if (!prof_scores.empty()) {
        scores = solver_result_from_json(json::parse(read_text_file(prof_scores))).scores;
        if (scores.size() != in.graph.num_nodes())
          throw Error("score file has " + std::to_string(scores.size()) + " entries, hypergraph has " +
                      std::to_string(in.graph.num_nodes()) + " nodes");
        label = fs::path(prof_scores).stem().string();
      } else {
        scores = detect(prof_method, in, cfg, prof_opt.restarts).scores;
      }
      std::ostringstream csv;
      if (!prof_core.empty()) {
        auto core = read_core_set_file(prof_core, in.labels);
        if (!core.unmatched.empty())
          std::cerr << "hypercp: " << core.unmatched.size() << " core labels not found in the hypergraph\n";
        ProfileCurve c = intersection_profile(scores, core.nodes, label);
        write_profile_csv(csv, std::span<const ProfileCurve>(&c, 1));
      } else {
        std::optional<XiRule> w;
        if (prof_weighted) w = cfg.xi;
        ProfileCurve c = profile(in.graph, scores, w, label);
        write_profile_csv(csv, std::span<const ProfileCurve>(&c, 1));
      }
      write_atomic(prof_out, csv.str());
      write_manifest(prof_manifest.empty() ? default_manifest(prof_out) : prof_manifest, args,
                     {{"subcommand", "profile"},
                      {"method", prof_method},
                      {"solver", to_json(cfg)},
                      {"inputs", input_json(prof_in)}});
    } else if (*compare) {
      auto in = load_input(cmp_in);
      auto cfg = solver_config(cmp_opt, in.graph);
      fs::path dir(cmp_dir);
      std::optional<CoreSetImport> core;
      if (!cmp_core.empty()) {
        core = read_core_set_file(cmp_core, in.labels);
        if (!core->unmatched.empty())
          std::cerr << "hypercp: " << core->unmatched.size() << " core labels not found in the hypergraph\n";
      }
      WeightedGraph expansion = clique_expansion(in.graph);
      std::vector<ProfileCurve> gammas, iotas;
      std::ostringstream timing;
      timing << "method,wall_seconds,iterations\n";
      std::optional<XiRule> w;
      if (cmp_weighted) w = cfg.xi;
      for (const char* method : kMethods) {
        auto d = detect(method, in, cfg, cmp_opt.restarts);
        gammas.push_back(profile(in.graph, d.scores, w, method));
        if (core) iotas.push_back(intersection_profile(d.scores, core->nodes, method));
        timing << method << ',' << format_double(d.seconds) << ',' << d.iterations << '\n';
        write_atomic((dir / ("scores_" + std::string(method) + ".json")).string(), d.payload.dump(2) + "\n");
        std::ostringstream coords;
        write_coordinates(coords, permuted_coordinates(expansion, d.scores));
        write_atomic((dir / ("coords_" + std::string(method) + ".txt")).string(), coords.str());
      }
      std::ostringstream prof;
      write_profile_csv(prof, gammas);
      write_atomic((dir / "profile.csv").string(), prof.str());
      if (core) {
        std::ostringstream inter;
        write_profile_csv(inter, iotas);
        write_atomic((dir / "intersection.csv").string(), inter.str());
      }
      write_atomic((dir / "timing.csv").string(), timing.str());
      write_manifest((dir / "manifest.json").string(), args,
                     {{"subcommand", "compare"},
                      {"solver", to_json(cfg)},
                      {"restarts", cmp_opt.restarts},
                      {"inputs", input_json(cmp_in)}});
    } else if (*replay) {
      json m = json::parse(read_text_file(replay_path));
      auto recorded = m.at("argv").get<std::vector<std::string>>();
      if (!recorded.empty() && recorded.front() == "replay") throw Error("manifest records a replay");
      return run(recorded);
    }
  } catch (const std::exception& e) {
    std::cerr << "hypercp: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hypercp::cli
