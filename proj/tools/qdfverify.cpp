// qdfverify: batch verification suites for the quartic-double-fivefold
// computations, with CI-friendly structured output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qdf/report.hpp"
#include "qdf/suites.hpp"

namespace {

struct Options {
  qdf::SuiteConfig cfg;
  std::string format = "table";  // table | json | jsonl
};

// plain key-value config: lines "key = value", '#' comments; flags override
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw qdf::Error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

int emit(const std::vector<qdf::VerificationReport>& rs, const Options& opt) {
  if (opt.format == "json")
    std::cout << qdf::to_json(rs, opt.cfg.timings);
  else if (opt.format == "jsonl")
    std::cout << qdf::to_jsonl(rs, opt.cfg.timings);
  else
    std::cout << qdf::to_table(rs, opt.cfg.timings);
  return qdf::any_failed(rs) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for the quartic double fivefold geometry"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Options opt;
  std::string config_path;
  if (const char* env = std::getenv("QDFVERIFY_CONFIG")) config_path = env;

  app.add_option("--config", config_path, "key=value config file (flags take precedence)");
  auto* fmt = app.add_option("--format", opt.format, "table, json or jsonl")
                  ->check(CLI::IsMember({"table", "json", "jsonl"}));
  auto* grid = app.add_option("--grid", opt.cfg.grid, "sweep bound for invariant grids");
  auto* prime = app.add_option("--prime", opt.cfg.prime, "odd prime <= 13 for enumerations");
  auto* seed = app.add_option("--seed", opt.cfg.seed, "instance seed");
  app.add_flag("--timings", opt.cfg.timings, "include wall time in records");

  std::string instance_file;
  int step = 0;

  auto* c_all = app.add_subcommand("verify-all", "run every suite");
  auto* c_chow = app.add_subcommand("chow", "intersection-theory checks");
  auto* c_coh = app.add_subcommand("cohomology", "cohomology oracle and pairing checks");
  auto* c_mut = app.add_subcommand("mutate", "replay the eight-step mutation sequence");
  c_mut->add_option("--step", step, "report a single step (the whole sequence is replayed internally)")
      ->check(CLI::Range(1, 8));
  auto* c_spec = app.add_subcommand("mutate-special", "divisor-ledger replay on the resolution");
  auto* c_disc = app.add_subcommand("discriminant", "determinant identity and finite-field runs");
  c_disc->add_option("--instance", instance_file, "instance file (overrides --prime/--seed)");
  auto* c_def = app.add_subcommand("defect", "Eagon-Northcott resolution and defect");
  auto* c_loc = app.add_subcommand("localgeom", "local models: coordinate change, Jacobians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) {
      auto kv = read_config(config_path);
      if (kv.count("grid") && grid->count() == 0) opt.cfg.grid = std::stoi(kv["grid"]);
      if (kv.count("prime") && prime->count() == 0) opt.cfg.prime = std::stoll(kv["prime"]);
      if (kv.count("seed") && seed->count() == 0) opt.cfg.seed = std::stoull(kv["seed"]);
      if (kv.count("format") && fmt->count() == 0) opt.format = kv["format"];
    }
    if (!instance_file.empty()) opt.cfg.instance_file = instance_file;

    std::vector<qdf::VerificationReport> rs;
    if (*c_all)
      rs = qdf::run_all(opt.cfg);
    else if (*c_chow)
      rs = qdf::suite_chow(opt.cfg);
    else if (*c_coh)
      rs = qdf::suite_cohomology(opt.cfg);
    else if (*c_mut)
      rs = qdf::suite_mutate(opt.cfg, step > 0 ? std::optional<int>(step) : std::nullopt);
    else if (*c_spec)
      rs = qdf::suite_mutate_special(opt.cfg);
    else if (*c_disc)
      rs = qdf::suite_discriminant(opt.cfg);
    else if (*c_def)
      rs = qdf::suite_defect(opt.cfg);
    else if (*c_loc)
      rs = qdf::suite_localgeom(opt.cfg);
    return emit(rs, opt);
  } catch (const qdf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
