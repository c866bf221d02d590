#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "feel/config.hpp"
#include "feel/csv.hpp"

namespace feel::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return f;
}

void finish(std::ofstream& f, const fs::path& path) {
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

void write_bundle(const fs::path& dir, const SimConfig& cfg, const ExperimentResult& result) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  const fs::path manifest = dir / "manifest.txt";
  auto m = open_output(manifest);
  m << "# feelsim " << FEEL_VERSION << "\n" << to_config_text(cfg);
  finish(m, manifest);

  const fs::path agg = dir / "aggregate.csv";
  auto a = open_output(agg);
  write_aggregate_csv(a, result.aggregate);
  finish(a, agg);

  for (const ServerTrace& s : result.servers) {
    const fs::path p = dir / ("server_" + std::to_string(s.server_id) + ".csv");
    auto f = open_output(p);
    write_server_csv(f, s);
    finish(f, p);
  }
}

std::string summary_line(const SimConfig& cfg, const ExperimentResult& result) {
  std::ostringstream s;
  s << scheme_name(cfg.scheme.kind) << ": ";
  if (result.aggregate.empty()) {
    s << "no slots simulated";
  } else {
    const AggregateRow& last = result.aggregate.back();
    s << "final_backlog_mb=" << format_number(last.queue_backlog_mb)
      << " cumulative_selected=" << format_number(last.cumulative_selected)
      << " final_accuracy=" << format_number(last.accuracy);
  }
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vehicle selection simulator for federated edge learning", "feelsim"};
  app.set_version_flag("--version", std::string(FEEL_VERSION));

  std::string config_path;
  std::optional<std::string> scheme;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> slots;
  std::optional<std::int64_t> servers;
  std::string out_dir = "out";
  bool compare = false;
  std::vector<std::string> settings;

  app.add_option("--config", config_path, "Flat key = value config file")->check(CLI::ExistingFile);
  app.add_option("--scheme", scheme, "Selection scheme")
      ->check(CLI::IsMember({"proposed", "maximum", "static", "random"}));
  app.add_option("--seed", seed, "Master seed (falls back to $FEEL_SEED)");
  app.add_option("--slots", slots, "Number of slots to simulate");
  app.add_option("--servers", servers, "Number of edge servers");
  app.add_option("--out", out_dir, "Output directory");
  app.add_flag("--compare", compare, "Run all four schemes with the shared seed");
  app.add_option("--set", settings, "Override any config key, key=value (repeatable)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Overrides overrides;
    for (const auto& s : settings) overrides.push_back(split_override(s));
    if (scheme) overrides.emplace_back("scheme", *scheme);
    if (!seed) {
      if (const char* env = std::getenv("FEEL_SEED"); env && *env) overrides.emplace_back("master_seed", env);
    } else {
      overrides.emplace_back("master_seed", std::to_string(*seed));
    }
    if (slots) overrides.emplace_back("max_slots", std::to_string(*slots));
    if (servers) overrides.emplace_back("n_servers", std::to_string(*servers));

    const SimConfig base = config_path.empty() ? parse_config_text("", overrides) : parse_config(config_path, overrides);

    if (!compare) {
      const ExperimentResult result = run_experiment(base);
      write_bundle(out_dir, base, result);
      out << summary_line(base, result) << '\n';
      return 0;
    }
    for (SchemeKind kind : {SchemeKind::proposed, SchemeKind::maximum, SchemeKind::static_k, SchemeKind::random_n}) {
      SimConfig cfg = base;
      cfg.scheme.kind = kind;
      const ExperimentResult result = run_experiment(cfg);
      write_bundle(fs::path(out_dir) / std::string(scheme_name(kind)), cfg, result);
      out << summary_line(cfg, result) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "feelsim: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace feel::cli
