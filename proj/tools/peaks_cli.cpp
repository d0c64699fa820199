// Command-line front end: computes the radial ground state, the energy
// expansion constants, lattice sweeps, and the reduced-energy maximizer,
// and runs the aggregate verification suite.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "peaks/energy_constants.hpp"
#include "peaks/ground_state.hpp"
#include "peaks/lattice.hpp"
#include "peaks/reduced_energy.hpp"
#include "peaks/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  int N = 6;
  double p = 2.0;
  int k = 8;
  double gamma = -1.0;
  double mu = 1.0;
  double delta = 0.01;
  double alpha = 3.0;
  double tol = 1e-12;
  std::string out = ".";
  unsigned seed = 20240817;
  bool quick = false;
  std::string config_file;
};

void load_config_file(RunConfig& cfg, const CLI::App& cmd) {
  if (cfg.config_file.empty()) return;
  std::ifstream in(cfg.config_file);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + cfg.config_file);
  nlohmann::json j = nlohmann::json::parse(in);
  // flags given on the command line win over file values
  auto absent = [&](const char* name) { return cmd.count(name) == 0; };
  if (j.contains("N") && absent("--N")) cfg.N = j["N"].get<int>();
  if (j.contains("p") && absent("--p")) cfg.p = j["p"].get<double>();
  if (j.contains("k") && absent("--k")) cfg.k = j["k"].get<int>();
  if (j.contains("gamma") && absent("--gamma")) cfg.gamma = j["gamma"].get<double>();
  if (j.contains("mu") && absent("--mu")) cfg.mu = j["mu"].get<double>();
  if (j.contains("delta") && absent("--delta")) cfg.delta = j["delta"].get<double>();
  if (j.contains("alpha") && absent("--alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("tol") && absent("--tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("seed") && absent("--seed")) cfg.seed = j["seed"].get<unsigned>();
}

nlohmann::json resolved_config(const RunConfig& cfg,
                               const peaks::SystemParams& params) {
  return nlohmann::json{{"version", kVersion},
                        {"seed", cfg.seed},
                        {"N", params.N},
                        {"p", params.p},
                        {"q", params.q},
                        {"k", params.k},
                        {"gamma", params.gamma},
                        {"mu", params.mu},
                        {"delta", params.delta},
                        {"epsilon", params.epsilon},
                        {"tol", cfg.tol}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

peaks::SystemParams make_params(const RunConfig& cfg) {
  return peaks::SystemParams::make(cfg.N, cfg.p, cfg.k, cfg.mu, cfg.gamma,
                                   cfg.delta);
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out);
  return (std::filesystem::path(cfg.out) / name).string();
}

int cmd_ground_state(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  const auto prof = peaks::solve_ground_state(params, cfg.tol);
  const auto csv = out_path(cfg, "profile.csv");
  const auto js = out_path(cfg, "profile.json");
  prof.save_csv(csv, js);
  {  // append the resolved configuration to the sidecar
    nlohmann::json j = nlohmann::json::parse(std::ifstream(js));
    j["config"] = resolved_config(cfg, params);
    write_text(js, j.dump(2) + "\n");
  }
  std::cout << "beta = " << prof.beta << "\n"
            << "a = " << prof.tail_a << ", b = " << prof.tail_b << "\n"
            << "regime = " << peaks::to_string(prof.regime) << "\n"
            << "ode residual = " << prof.ode_residual() << "\n"
            << "wrote " << csv << "\n";
  return 0;
}

int cmd_constants(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  const auto prof = peaks::solve_ground_state(params, cfg.tol);
  const auto c = peaks::compute_energy_constants(prof, params);
  nlohmann::json j = nlohmann::json::parse(c.to_json_text());
  j["config"] = resolved_config(cfg, params);
  const auto path = out_path(cfg, "constants.json");
  write_text(path, j.dump(2) + "\n");
  std::cout << "Q0 = " << c.Q0.value << ", Q1 = " << c.Q1.value
            << ", Q2 = " << c.Q2.value << ", Q3 = " << c.Q3.value
            << ", Q4 = " << c.Q4.value << "\n"
            << "wrote " << path << "\n";
  return 0;
}

int cmd_lattice(const RunConfig& cfg) {
  const auto path = out_path(cfg, "lattice_sweep.csv");
  const int k_hi = std::max(64, cfg.k);
  peaks::export_lattice_sweep(path, cfg.N, cfg.alpha, 8, k_hi);
  std::cout << "Q3(N=" << cfg.N << ") = " << peaks::Q3_constant(cfg.N) << "\n"
            << "wrote " << path << "\n";
  return 0;
}

int cmd_reduce(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  if (params.gamma >= 0)
    throw std::invalid_argument(
        "reduce: the construction needs negative boundary mean curvature "
        "(gamma < 0)");
  const auto prof = peaks::solve_ground_state(params, cfg.tol);
  const auto c = peaks::compute_energy_constants(prof, params);
  const auto model = peaks::ReducedEnergyModel::make(c.Q0.value, c.Q1.value,
                                                     c.Q4.value, params);
  nlohmann::json j = nlohmann::json::parse(peaks::reduce_report_json(model));
  j["config"] = resolved_config(cfg, params);
  const auto jpath = out_path(cfg, "reduce.json");
  write_text(jpath, j.dump(2) + "\n");
  const auto cpath = out_path(cfg, "reduced_energy.csv");
  peaks::export_curve_csv(model, cpath);
  std::cout << "lambda_star = " << peaks::lambda_star(model)
            << ", window_ok = " << (peaks::existence_window(model) ? 1 : 0)
            << "\nwrote " << jpath << " and " << cpath << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto results = peaks::run_verification(cfg.quick, cfg.seed);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail
              << "\n";
  }
  write_text(out_path(cfg, "verify.json"),
             peaks::verification_json(results, cfg.seed));
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 4;
}

int cmd_export(const RunConfig& cfg) {
  int rc = cmd_ground_state(cfg);
  if (rc == 0) rc = cmd_constants(cfg);
  if (rc == 0) rc = cmd_reduce(cfg);
  if (rc == 0) rc = cmd_lattice(cfg);
  return rc;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--N", cfg.N, "space dimension (>= 5)");
  cmd->add_option("--p", cfg.p, "exponent p on the critical hyperbola");
  cmd->add_option("--k", cfg.k, "number of boundary peaks");
  cmd->add_option("--gamma", cfg.gamma, "boundary mean curvature");
  cmd->add_option("--mu", cfg.mu, "zeroth-order coefficient");
  cmd->add_option("--delta", cfg.delta, "concentration window bound");
  cmd->add_option("--alpha", cfg.alpha, "lattice sum exponent");
  cmd->add_option("--tol", cfg.tol, "solver tolerance");
  cmd->add_option("--out", cfg.out, "output directory");
  cmd->add_option("--seed", cfg.seed, "sampling seed");
  cmd->add_flag("--quick", cfg.quick, "reduced sweep sizes");
  cmd->add_option("--config", cfg.config_file, "JSON config file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary-peak construction toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  int (*handler)(const RunConfig&) = nullptr;
  CLI::App* chosen = nullptr;
  const std::pair<const char*, int (*)(const RunConfig&)> cmds[] = {
      {"ground-state", cmd_ground_state}, {"constants", cmd_constants},
      {"lattice", cmd_lattice},           {"reduce", cmd_reduce},
      {"verify", cmd_verify},             {"export", cmd_export}};
  for (const auto& [name, fn] : cmds) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, cfg);
    sub->callback([&, sub, fn = fn] {
      chosen = sub;
      handler = fn;
    });
  }
  CLI11_PARSE(app, argc, argv);
  try {
    load_config_file(cfg, *chosen);
    return handler(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const peaks::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
