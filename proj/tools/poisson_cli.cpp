// Runs the verification suites from a flat key = value configuration and
// writes report.csv / report.json. Exit status: 0 when every check holds,
// 1 when a check is violated, 2 on configuration errors, 3 when a check
// fails to run.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "poisson/config.hpp"
#include "poisson/report.hpp"
#include "poisson/suites.hpp"

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<double> ci_level;
  std::optional<std::size_t> n_outer;
  std::optional<unsigned> threads;
  bool quiet = false;
};

int run(const Options& opt, const std::vector<std::string>& suites) {
  poisson::RunConfig config;
  try {
    config = opt.config_path.empty() ? poisson::default_config()
                                     : poisson::load_config(opt.config_path);
    poisson::apply_environment(config);
    if (opt.seed) config.mc.seed = *opt.seed;
    if (opt.ci_level) config.mc.ci_level = *opt.ci_level;
    if (opt.n_outer) config.mc.n_outer = *opt.n_outer;
    if (opt.threads) config.mc.threads = *opt.threads;
    if (opt.out_dir) config.out_dir = *opt.out_dir;
    config.validate();
  } catch (const poisson::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  poisson::Report report;
  try {
    report = poisson::run_report(config, suites, [&](const std::string& s) {
      if (!opt.quiet) std::cerr << "running " << s << '\n';
    });
    report.write(config.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  std::size_t violated = 0;
  for (const auto& r : report.rows) {
    if (r.verdict == poisson::Verdict::violated) {
      ++violated;
      std::cerr << "VIOLATED " << r.check << " (" << r.inputs << "): left " << r.left.mean
                << " right " << r.right.mean << " tolerance " << r.tolerance << '\n';
    }
  }
  if (!opt.quiet)
    std::cout << report.rows.size() << " checks, " << violated << " violated; reports in "
              << config.out_dir << " (config " << poisson::hex64(report.config_hash) << ")\n";
  return violated == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson configuration space calculus: identity and inequality checks"};
  app.set_version_flag("--version", POISSON_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "Configuration file (built-in default when omitted)");
  app.add_option("--seed", opt.seed, "Master seed (overrides mc.seed and POISSON_SEED)");
  app.add_option("--out-dir", opt.out_dir, "Directory for report.csv and report.json");
  app.add_option("--ci-level", opt.ci_level, "Confidence level of reported intervals")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--n-outer", opt.n_outer, "Configurations per estimate");
  app.add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  app.add_flag("-q,--quiet", opt.quiet, "Only report violations");

  std::vector<std::string> selected;
  for (const auto& s : poisson::known_suites()) {
    app.add_subcommand(s, "Run the " + s + " suite")->callback([&selected, s] { selected = {s}; });
  }
  app.add_subcommand("all", "Run every suite listed in the configuration")->callback([&selected] {
    selected.clear();
  });
  bool list = false;
  app.add_subcommand("list-checks", "Print every check id with the result it verifies")
      ->callback([&list] { list = true; });

  CLI11_PARSE(app, argc, argv);
  if (list) {
    std::cout << poisson::list_checks();
    return 0;
  }
  return run(opt, selected);
}
