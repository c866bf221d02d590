// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "feel/channel.hpp"
#include "feel/learning.hpp"
#include "feel/lyapunov.hpp"
#include "feel/mobility.hpp"
#include "feel/selection.hpp"
#include "feel/simulator.hpp"
#include "oracles.hpp"

namespace {

using namespace feel;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
constexpr double kQmax = 2000.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> body;
};

SimConfig reference(SchemeKind kind, std::uint64_t seed) {
  SimConfig cfg;  // reference scenario defaults
  cfg.scheme.kind = kind;
  cfg.master_seed = seed;
  return cfg;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double final_cumulative(const ExperimentResult& r) {
  return r.aggregate.empty() ? 0.0 : r.aggregate.back().cumulative_selected;
}

std::int64_t last_positive_n_star(const ExperimentResult& r) {
  for (auto it = r.aggregate.rbegin(); it != r.aggregate.rend(); ++it)
    if (it->n_star > 0.0) return it->slot;
  return -1;
}

Outcome queue_safety() {
  long violations = 0;
  double worst = 0.0;
  for (auto seed : kSeeds) {
    const auto res = run_experiment(reference(SchemeKind::proposed, seed));
    for (const auto& s : res.servers)
      for (const auto& row : s.rows) {
        worst = std::max(worst, row.queue_backlog_mb);
        if (row.queue_backlog_mb > kQmax) ++violations;
      }
  }
  return {violations == 0, fmt("%ld violations over %zu seeds x 9 servers, max backlog %.0f MB", violations,
                               std::size(kSeeds), worst)};
}

Outcome maximum_overflow() {
  int ok_runs = 0;
  int runs = 0;
  long latest = 0;
  for (auto seed : kSeeds) {
    SimConfig cfg = reference(SchemeKind::maximum, seed);
    const auto res = run_experiment(cfg);
    for (const auto& s : res.servers) {
      ++runs;
      for (std::size_t t = 0; t < 10 && t < s.rows.size(); ++t) {
        if (s.rows[t].queue_backlog_mb > kQmax) {
          ++ok_runs;
          latest = std::max<long>(latest, static_cast<long>(t));
          break;
        }
      }
    }
  }
  return {ok_runs == runs, fmt("%d/%d server runs exceed %.0f MB within 10 slots (latest first overflow at slot %ld)",
                               ok_runs, runs, kQmax, latest)};
}

Outcome static_underuse() {
  double worst = 0.0;
  bool pass = true;
  for (auto seed : kSeeds) {
    const auto res = run_experiment(reference(SchemeKind::static_k, seed));
    double sum = 0.0;
    for (std::size_t t = 0; t < 1500; ++t) {
      const auto& agg = res.aggregate;
      sum += t < agg.size() ? agg[t].queue_backlog_mb : agg.back().queue_backlog_mb;
    }
    const double mean = sum / 1500.0;
    worst = std::max(worst, mean);
    pass = pass && mean < 0.5 * kQmax;
  }
  return {pass, fmt("worst time-averaged backlog %.1f MB (limit %.0f MB)", worst, 0.5 * kQmax)};
}

Outcome selection_ordering() {
  double prop = 0.0;
  double rand = 0.0;
  for (auto seed : kSeeds) {
    prop += final_cumulative(run_experiment(reference(SchemeKind::proposed, seed)));
    rand += final_cumulative(run_experiment(reference(SchemeKind::random_n, seed)));
  }
  prop /= std::size(kSeeds);
  rand /= std::size(kSeeds);
  const bool pass = prop > rand && prop >= 5500.0 && prop <= 8000.0;
  return {pass, fmt("mean final cumulative selected: proposed %.1f, random %.1f (proposed must lie in [5500, 8000])",
                    prop, rand)};
}

Outcome longevity_ordering() {
  int strict = 0;
  bool never_shorter = true;
  std::string per_seed;
  for (auto seed : kSeeds) {
    const auto p = last_positive_n_star(run_experiment(reference(SchemeKind::proposed, seed)));
    const auto r = last_positive_n_star(run_experiment(reference(SchemeKind::random_n, seed)));
    never_shorter = never_shorter && p >= r;
    if (p > r) ++strict;
    per_seed += fmt(" %lld/%lld", static_cast<long long>(p), static_cast<long long>(r));
  }
  return {never_shorter && strict >= 7,
          fmt("proposed >= random in all seeds: %s, strict in %d/10; last n*>0 slot (proposed/random):",
              never_shorter ? "yes" : "no", strict) +
              per_seed};
}

Outcome argmax_oracle() {
  Rng rng{20240601};
  const DriftPenaltyConfig drift{1e10, 10.0};
  const CurveParams curve{};
  long mismatches = 0;
  long mu_mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const double q = uniform(rng, 0.0, 2200.0);
    const auto available = static_cast<std::int64_t>(uniform(rng, 0.0, 101.0));
    const double mu = uniform(rng, 0.0, 1000.0);
    const double base = (i % 2 == 0) ? 0.0 : uniform(rng, 0.0, 20000.0);  // slot and cumulative bases
    const UtilityFn u = [&](std::int64_t n) { return slot_utility(n, 10.0, curve, base); };
    const auto got = optimal_n(q, available, mu, kQmax, drift, u);
    if (got != oracle::brute_force_argmax(q, available, mu, kQmax, 1e10, 10.0, u)) ++mismatches;
    for (int k = 0; k < 100; ++k) {
      if (optimal_n(q, available, uniform(rng, 0.0, 5000.0), kQmax, drift, u) != got) ++mu_mismatches;
    }
  }
  return {mismatches == 0 && mu_mismatches == 0,
          fmt("%ld argmax mismatches over 10^4 instances, %ld mu-invariance mismatches over 10^6 pairs", mismatches,
              mu_mismatches)};
}

Outcome formula_values() {
  const RadioEnvironment env;
  // independent evaluations written straight from the formulas
  const double cos_theta = 100.0 / std::sqrt(50.0 * 50.0 + 100.0 * 100.0);
  const double doppler_oracle = 15.0 / (3.0e8 / 2.5e9) * cos_theta;
  const double loss_oracle = 20.0 * std::log10(2500.0 + doppler_oracle / 1e6) + 10.0 * 3.0 * std::log10(100.0) - 28.0;
  const double acc_oracle = oracle::learning_curve(10.0, 1.0, -0.3);

  const double got_doppler = doppler(env, 15.0, 100.0);
  const double got_loss = path_loss(env, got_doppler, 100.0);
  const double got_acc = expected_accuracy(10.0, CurveParams{});

  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  const double worst = std::max({rel(got_doppler, doppler_oracle), rel(got_doppler, 111.8), rel(got_loss, loss_oracle),
                                 rel(got_loss, 99.96), rel(got_acc, acc_oracle), rel(got_acc, 0.4988)});
  return {worst <= 1e-2, fmt("doppler %.3f Hz, path loss %.3f dB, accuracy %.5f; worst relative error %.2e", got_doppler,
                             got_loss, got_acc, worst)};
}

Outcome conservation() {
  long failures = 0;
  long runs = 0;
  for (auto kind : {SchemeKind::proposed, SchemeKind::maximum, SchemeKind::static_k, SchemeKind::random_n}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SimConfig cfg = reference(kind, seed);
      const auto res = run_experiment(cfg);
      for (const auto& s : res.servers) {
        ++runs;
        double in = 0.0;
        double out = 0.0;
        double prev_acc = 0.0;
        bool ok = !s.rows.empty();
        for (const auto& r : s.rows) {
          in += r.arrivals_mb;
          out += r.departures_mb;
          ok = ok && r.accuracy >= prev_acc && r.loss == 1.0 - r.accuracy;
          prev_acc = r.accuracy;
        }
        ok = ok && (in - out == s.rows.back().queue_backlog_mb);
        for (const auto& v : s.vehicles)
          ok = ok && v.initial_items == v.state.remaining_items + cfg.items_per_batch() * v.uploads;
        if (!ok) ++failures;
      }
    }
  }
  return {failures == 0, fmt("%ld/%ld server runs violate a conservation identity", failures, runs)};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / ("feel_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::ostringstream sink;
  const std::vector<std::string> base{"feelsim", "--compare", "--seed", "2718", "--out"};
  auto args_a = base;
  args_a.push_back((root / "a").string());
  auto args_b = base;
  args_b.push_back((root / "b").string());
  const int rc = cli::run_cli(args_a, sink, sink) | cli::run_cli(args_b, sink, sink);
  long files = 0;
  long differing = 0;
  for (const auto& e : fs::recursive_directory_iterator(root / "a")) {
    if (!e.is_regular_file()) continue;
    ++files;
    const auto twin = root / "b" / fs::relative(e.path(), root / "a");
    if (!fs::exists(twin) || slurp(e.path()) != slurp(twin)) ++differing;
  }
  fs::remove_all(root);
  return {rc == 0 && files > 0 && differing == 0,
          fmt("%ld bundle files compared, %ld differ (exit status %d)", files, differing, rc)};
}

Outcome priority_monotonicity() {
  Rng rng{31337};
  long violations = 0;
  for (int i = 0; i < 100000; ++i) {
    const double d = uniform(rng, 1e-3, 1000.0), c = uniform(rng, 1e-3, 1.0), e = uniform(rng, 1e-3, 100.0),
                 s = uniform(rng, 1e-3, 70.0), k = uniform(rng, 1.0, 10.0);
    auto w = [](double dd, double cc, double ee, double ss) {
      return priority(ResourceStatus{VehicleId{0}, dd, cc, ee, ss, true});
    };
    const double base = w(d, c, e, s);
    if (w(d * k, c, e, s) < base) ++violations;
    if (w(d, c * k, e, s) < base) ++violations;
    if (w(d, c, e * k, s) > base) ++violations;
    if (w(d, c, e, s * k) > base) ++violations;
    if (w(d, c, e, 0.0) != 0.0 || w(d, c, 0.0, s) != 0.0) ++violations;
  }
  return {violations == 0, fmt("%ld violations over 10^5 random positive quadruples", violations)};
}

Outcome truncated_gaussian() {
  const SpeedDistribution dist(15.0, 0.7, 13.6, 16.4);
  Rng rng{424242};
  long outside = 0;
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const double v = sample_speed(dist, rng);
    if (v < 13.6 || v > 16.4) ++outside;
    sum += v;
  }
  const double mean = sum / n;
  const double oracle_mean = oracle::truncated_mean_by_quadrature(15.0, 0.7, 13.6, 16.4);
  return {outside == 0 && std::abs(mean - oracle_mean) <= 0.02,
          fmt("%ld of 10^6 samples outside [13.6, 16.4]; empirical mean %.5f vs quadrature %.5f", outside, mean,
              oracle_mean)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "queue safety (proposed)", 60, queue_safety},
      {2, "overflow under maximum scheme", 60, maximum_overflow},
      {3, "static under-utilisation", 60, static_underuse},
      {4, "selection-count ordering", 120, selection_ordering},
      {5, "longevity ordering", 120, longevity_ordering},
      {6, "argmax oracle and mu invariance", 30, argmax_oracle},
      {7, "formula values", 5, formula_values},
      {8, "conservation", 60, conservation},
      {9, "determinism", 60, determinism},
      {10, "priority monotonicity", 5, priority_monotonicity},
      {11, "truncated-Gaussian bounds and mean", 30, truncated_gaussian},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.time_limit_s, in_time ? "" : " EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
