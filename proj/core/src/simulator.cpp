#include "feel/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>

namespace feel {

void SimConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(n_vehicles >= 0, "n_vehicles must be >= 0");
  require(q_max_mb > 0.0, "q_max_mb must be > 0");
  require(tradeoff_v >= 0.0, "tradeoff_v must be >= 0");
  require(batch_mb > 0.0, "batch_mb must be > 0");
  require(slot_seconds > 0.0, "slot_seconds must be > 0");
  require(data_items_per_vehicle >= 0, "data_items_per_vehicle must be >= 0");
  require(item_mb > 0.0, "item_mb must be > 0");
  require(energy_init_min > 0.0 && energy_init_min <= energy_init_max,
          "energy_init range must satisfy 0 < energy_init_min <= energy_init_max");
  require(energy_scale >= 0.0, "energy_scale must be >= 0");
  require(speed_min_mps > 0.0, "speed_min_mps must be > 0");
  require(scheme.static_count >= 0, "static_count must be >= 0");
  require(n_servers >= 1, "n_servers must be >= 1");
  require(max_slots >= 0, "max_slots must be >= 0");
  radio.validate();
  departure.validate();
  (void)geometry();
  (void)speed_distribution();
  (void)items_per_batch();
}

CoverageGeometry SimConfig::geometry() const { return CoverageGeometry{span_d_m, radius_r_m, radio.server_height_m}; }

SpeedDistribution SimConfig::speed_distribution() const {
  return SpeedDistribution{speed_mean_mps, speed_variance, speed_min_mps, speed_max_mps};
}

std::int64_t SimConfig::items_per_batch() const {
  const double ratio = batch_mb / item_mb;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9)
    throw std::invalid_argument("batch_mb must be a positive whole multiple of item_mb");
  return static_cast<std::int64_t>(rounded);
}

namespace {

VehicleRecord spawn_vehicle(const SimConfig& cfg, const CoverageGeometry& geom, const SpeedDistribution& speeds,
                            VehicleId id, std::optional<double> position, Rng& fleet) {
  VehicleRecord rec;
  VehicleState& v = rec.state;
  v.id = id;
  v.speed_mps = sample_speed(speeds, fleet);
  v.position_m = position ? *position : uniform(fleet, 0.0, geom.span());
  v.remaining_energy = uniform(fleet, cfg.energy_init_min, cfg.energy_init_max);
  v.remaining_items = cfg.data_items_per_vehicle;
  v.survivability_s = initial_survivability(geom, v.position_m, v.speed_mps);
  v.active = compute_active(v, geom);
  rec.initial_items = v.remaining_items;
  return rec;
}

}  // namespace

ServerTrace run_server(const SimConfig& cfg, std::int64_t server_id, std::uint64_t seed) {
  cfg.validate();
  const CoverageGeometry geom = cfg.geometry();
  const SpeedDistribution speeds = cfg.speed_distribution();
  const DriftPenaltyConfig drift = cfg.drift_penalty();
  const std::int64_t batch_items = cfg.items_per_batch();
  const RadioEnvironment& env = cfg.radio;

  Rng fleet_rng = make_stream(seed, Stream::fleet);
  Rng channel_rng = make_stream(seed, Stream::channel);
  Rng departure_rng = make_stream(seed, Stream::departure);
  Rng scheme_rng = make_stream(seed, Stream::scheme);

  ServerTrace trace;
  trace.server_id = server_id;
  trace.seed = seed;
  auto& fleet = trace.vehicles;
  fleet.reserve(static_cast<std::size_t>(cfg.n_vehicles));
  for (std::int64_t k = 0; k < cfg.n_vehicles; ++k)
    fleet.push_back(spawn_vehicle(cfg, geom, speeds, VehicleId{static_cast<std::uint32_t>(k)}, std::nullopt, fleet_rng));

  CacheQueue queue{cfg.q_max_mb};
  LearningCurve curve{cfg.curve};
  double mu_estimate = 0.0;
  std::int64_t cumulative_selected = 0;

  std::vector<ResourceStatus> statuses;
  std::vector<ChannelSnapshot> snapshots(fleet.size());
  std::vector<std::optional<double>> shadow(fleet.size());
  std::vector<double> quality;

  for (std::int64_t t = 0; t < cfg.max_slots; ++t) {
    // (1) channel and resource status of every vehicle in coverage, by id
    statuses.clear();
    quality.clear();
    snapshots.resize(fleet.size());
    shadow.assign(fleet.size(), std::nullopt);
    for (auto& rec : fleet) {
      const VehicleState& v = rec.state;
      if (!v.active) continue;
      const double noise = uniform(channel_rng, env.noise_min, env.noise_max);
      const double eps = env.shadow_eps_min == env.shadow_eps_max
                             ? env.shadow_eps_min
                             : uniform(channel_rng, env.shadow_eps_min, env.shadow_eps_max);
      const double dist = distance_to_server(geom, v.position_m, env.d_min_m);
      const auto idx = to_index(v.id);
      snapshots[idx] = compute_snapshot(env, v.speed_mps, dist, eps, noise, cfg.batch_mb);
      shadow[idx] = snapshots[idx].shadow_corr;
      statuses.push_back({v.id, static_cast<double>(v.remaining_items) * cfg.item_mb, 0.0, v.remaining_energy,
                          v.survivability_s, true});
      quality.push_back(snapshots[idx].comm_quality);
    }
    if (env.comm_quality_mode == CommQualityMode::normalized) normalize_comm_quality(quality);
    for (std::size_t i = 0; i < statuses.size(); ++i) statuses[i].comm_quality = quality[i];

    const auto eligible = static_cast<std::int64_t>(
        std::count_if(statuses.begin(), statuses.end(), [&](const auto& s) { return is_eligible(s, cfg.batch_mb); }));

    // (2) how many vehicles may upload
    std::int64_t n_star = 0;
    switch (cfg.scheme.kind) {
      case SchemeKind::proposed:
      case SchemeKind::random_n: {
        const double base = cfg.utility_basis == UtilityBasis::cumulative ? curve.cumulative_mb() : 0.0;
        const UtilityFn utility = [&](std::int64_t n) { return slot_utility(n, cfg.batch_mb, cfg.curve, base); };
        n_star = optimal_n(queue.backlog_mb(), eligible, mu_estimate, cfg.q_max_mb, drift, utility);
        break;
      }
      case SchemeKind::maximum: n_star = eligible; break;
      case SchemeKind::static_k: n_star = std::min(cfg.scheme.static_count, eligible); break;
    }

    // (3) who uploads
    const SelectionDecision decision = select(cfg.scheme, statuses, n_star, cfg.batch_mb, scheme_rng, t);

    // (4) debit data and energy, (5) enqueue
    for (VehicleId id : decision.selected) {
      auto& rec = fleet[to_index(id)];
      rec.state.remaining_items -= batch_items;
      rec.state.remaining_energy =
          update_energy(rec.state.remaining_energy, snapshots[to_index(id)].tx_energy * cfg.energy_scale);
      ++rec.uploads;
      queue.enqueue({id, cfg.batch_mb, t});
    }

    // (6) results delivered back; mu for the next slot's objective
    const DepartureOutcome departed = sample_departures(queue, cfg.departure, shadow, departure_rng);
    mu_estimate = departed.departed_mb;

    // (7) training on this slot's uploads
    const TrainingRecord trained = curve.record_training(decision.arrivals_mb);
    cumulative_selected += static_cast<std::int64_t>(decision.selected.size());

    // (8) kinematics
    const std::size_t fleet_size = fleet.size();
    for (std::size_t i = 0; i < fleet_size; ++i) {
      if (!fleet[i].state.active) continue;
      fleet[i].state = advance_slot(fleet[i].state, cfg.slot_seconds, geom);
      if (!fleet[i].state.active && cfg.respawn) {
        fleet.push_back(spawn_vehicle(cfg, geom, speeds, VehicleId{static_cast<std::uint32_t>(fleet.size())}, 0.0,
                                      fleet_rng));
      }
    }

    // (9) emit
    SlotMetrics row;
    row.slot = t;
    row.server_id = server_id;
    row.scheme = cfg.scheme.kind;
    row.queue_backlog_mb = queue.backlog_mb();
    row.n_star = n_star;
    row.n_selected = static_cast<std::int64_t>(decision.selected.size());
    row.arrivals_mb = decision.arrivals_mb;
    row.departures_mb = departed.departed_mb;
    row.cumulative_selected = cumulative_selected;
    row.cumulative_trained_mb = curve.cumulative_mb();
    row.accuracy = trained.accuracy;
    row.loss = trained.loss;
    row.active_vehicles = static_cast<std::int64_t>(statuses.size());
    trace.rows.push_back(row);

    if (cfg.stop_when_drained && !cfg.respawn && queue.empty()) {
      const bool any_data = std::any_of(fleet.begin(), fleet.end(), [&](const VehicleRecord& r) {
        return r.state.active && r.state.remaining_items >= batch_items;
      });
      if (!any_data) break;
    }
  }
  return trace;
}

std::vector<AggregateRow> aggregate(const std::vector<ServerTrace>& servers) {
  std::size_t length = 0;
  for (const auto& s : servers) length = std::max(length, s.rows.size());
  std::vector<AggregateRow> out(length);
  if (servers.empty()) return out;
  const double count = static_cast<double>(servers.size());

  for (std::size_t t = 0; t < length; ++t) {
    AggregateRow& a = out[t];
    a.slot = static_cast<std::int64_t>(t);
    for (const auto& s : servers) {
      if (s.rows.empty()) continue;
      const bool live = t < s.rows.size();
      const SlotMetrics& r = live ? s.rows[t] : s.rows.back();
      a.scheme = r.scheme;
      a.queue_backlog_mb += r.queue_backlog_mb;
      a.cumulative_selected += static_cast<double>(r.cumulative_selected);
      a.cumulative_trained_mb += r.cumulative_trained_mb;
      a.accuracy += r.accuracy;
      a.loss += r.loss;
      a.active_vehicles += static_cast<double>(r.active_vehicles);
      if (live) {
        a.n_star += static_cast<double>(r.n_star);
        a.n_selected += static_cast<double>(r.n_selected);
        a.arrivals_mb += r.arrivals_mb;
        a.departures_mb += r.departures_mb;
      }
    }
    a.queue_backlog_mb /= count;
    a.n_star /= count;
    a.n_selected /= count;
    a.arrivals_mb /= count;
    a.departures_mb /= count;
    a.cumulative_selected /= count;
    a.cumulative_trained_mb /= count;
    a.accuracy /= count;
    a.loss /= count;
    a.active_vehicles /= count;
  }
  return out;
}

ExperimentResult run_experiment(const SimConfig& cfg) {
  cfg.validate();
  std::vector<std::future<ServerTrace>> jobs;
  jobs.reserve(static_cast<std::size_t>(cfg.n_servers));
  for (std::int64_t i = 0; i < cfg.n_servers; ++i) {
    jobs.push_back(std::async(std::launch::async, [&cfg, i] {
      return run_server(cfg, i, server_seed(cfg.master_seed, static_cast<std::uint64_t>(i)));
    }));
  }
  ExperimentResult result;
  for (auto& j : jobs) result.servers.push_back(j.get());
  result.aggregate = aggregate(result.servers);
  return result;
}

}  // namespace feel
