#pragma once

#include <cstdint>
#include <vector>

#include "feel/channel.hpp"
#include "feel/learning.hpp"
#include "feel/lyapunov.hpp"
#include "feel/mobility.hpp"
#include "feel/selection.hpp"

namespace feel {

/// Everything needed to reproduce a run. Defaults are the reference scenario:
/// 100 vehicles per server, 2000 MB cache, V = 1e10, 10 MB batches, 50 ms slots,
/// nine servers.
struct SimConfig {
  std::int64_t n_vehicles = 100;
  double span_d_m = 1000.0;
  double radius_r_m = 500.0;
  double q_max_mb = 2000.0;
  double tradeoff_v = 1e10;
  double batch_mb = 10.0;
  double slot_seconds = 0.05;
  std::int64_t data_items_per_vehicle = 1000;
  double item_mb = 1.0;
  double energy_init_min = 50.0;
  double energy_init_max = 100.0;
  double energy_scale = 1.0;
  double speed_mean_mps = 15.0;
  double speed_variance = 0.7;
  double speed_min_mps = 13.6;
  double speed_max_mps = 16.4;
  RadioEnvironment radio;  // radio.server_height_m doubles as the mast height h
  CurveParams curve;
  UtilityBasis utility_basis = UtilityBasis::slot;
  Scheme scheme;
  DepartureModel departure;
  std::int64_t n_servers = 9;
  std::int64_t max_slots = 1500;
  std::uint64_t master_seed = 1;
  bool respawn = false;
  bool stop_when_drained = true;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  CoverageGeometry geometry() const;
  SpeedDistribution speed_distribution() const;
  DriftPenaltyConfig drift_penalty() const { return {tradeoff_v, batch_mb}; }
  std::int64_t items_per_batch() const;
};

struct SlotMetrics {
  std::int64_t slot = 0;
  std::int64_t server_id = 0;
  SchemeKind scheme = SchemeKind::proposed;
  double queue_backlog_mb = 0.0;
  std::int64_t n_star = 0;
  std::int64_t n_selected = 0;
  double arrivals_mb = 0.0;
  double departures_mb = 0.0;
  std::int64_t cumulative_selected = 0;
  double cumulative_trained_mb = 0.0;
  double accuracy = 0.0;
  double loss = 1.0;
  std::int64_t active_vehicles = 0;
};

/// Mean over servers of every numeric SlotMetrics field.
struct AggregateRow {
  std::int64_t slot = 0;
  SchemeKind scheme = SchemeKind::proposed;
  double queue_backlog_mb = 0.0;
  double n_star = 0.0;
  double n_selected = 0.0;
  double arrivals_mb = 0.0;
  double departures_mb = 0.0;
  double cumulative_selected = 0.0;
  double cumulative_trained_mb = 0.0;
  double accuracy = 0.0;
  double loss = 0.0;
  double active_vehicles = 0.0;
};

struct VehicleRecord {
  VehicleState state;
  std::int64_t initial_items = 0;
  std::int64_t uploads = 0;
};

struct ServerTrace {
  std::int64_t server_id = 0;
  std::uint64_t seed = 0;
  std::vector<SlotMetrics> rows;
  std::vector<VehicleRecord> vehicles;  // final state, indexed by vehicle id
};

struct ExperimentResult {
  std::vector<ServerTrace> servers;
  std::vector<AggregateRow> aggregate;
};

/// Simulates one edge server. Each slot: refresh channels and statuses,
/// size n*, select, debit uploaders, enqueue, depart, train, move vehicles,
/// emit a row.
ServerTrace run_server(const SimConfig& cfg, std::int64_t server_id, std::uint64_t seed);

/// Runs cfg.n_servers independent servers (in parallel) and averages them.
ExperimentResult run_experiment(const SimConfig& cfg);

/// Row t averages row t of every trace; a trace that ended early contributes
/// its final state with zero per-slot flows.
std::vector<AggregateRow> aggregate(const std::vector<ServerTrace>& servers);

}  // namespace feel
