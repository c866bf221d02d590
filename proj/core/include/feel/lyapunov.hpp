#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "feel/mobility.hpp"
#include "feel/rng.hpp"

namespace feel {

struct Batch {
  VehicleId owner{};
  double size_mb = 0.0;
  std::int64_t arrival_slot = 0;
};

/// Bounded FCFS backlog of uploaded batches awaiting result delivery.
/// Capacity is advisory: the maximum scheme is allowed to overrun it and the
/// overrun is what gets reported.
class CacheQueue {
 public:
  explicit CacheQueue(double capacity_mb);

  void enqueue(Batch batch);
  double backlog_mb() const noexcept { return backlog_mb_; }
  double capacity_mb() const noexcept { return capacity_mb_; }
  std::size_t size() const noexcept { return batches_.size(); }
  bool empty() const noexcept { return batches_.empty(); }
  const std::deque<Batch>& batches() const noexcept { return batches_; }

  /// Removes the batches flagged in `departs` (indexed in FIFO order over the
  /// first departs.size() entries) and keeps survivors in order.
  std::vector<Batch> remove_flagged(const std::vector<bool>& departs);

 private:
  double capacity_mb_;
  double backlog_mb_ = 0.0;
  std::deque<Batch> batches_;
};

struct DriftPenaltyConfig {
  double tradeoff_v = 1e10;
  double batch_mb = 10.0;

  void validate() const;
};

/// max(q + arrivals - departures, 0)
double queue_update(double q_mb, double arrivals_mb, double departures_mb);

/// Quadratic Lyapunov function q^2 / 2.
double lyapunov_value(double q_mb);

double arrivals_for(std::int64_t n, const DriftPenaltyConfig& cfg);

using UtilityFn = std::function<double(std::int64_t)>;

/// Per-slot drift-plus-penalty objective V * U(n) + q * (C_n * n - mu). The
/// constant bounding the squared-increment term is omitted; it is the same
/// for every n.
double objective(std::int64_t n, double q_mb, double mu_mb, const DriftPenaltyConfig& cfg, const UtilityFn& utility);

/// Argmax of `objective` over n in [0, available] with q + C_n * n <= q_max.
/// Ties go to the larger n.
std::int64_t optimal_n(double q_mb, std::int64_t available, double mu_est_mb, double q_max_mb,
                       const DriftPenaltyConfig& cfg, const UtilityFn& utility);

enum class DepartureKind { bernoulli, channel_gated };

struct DepartureModel {
  DepartureKind kind = DepartureKind::bernoulli;
  double probability = 0.5;
  // Only head-of-line batches fitting within this many MB are served in a
  // slot. 0 disables the window.
  double window_mb = 100.0;
  double gate_threshold = 0.6;

  void validate() const;
};

struct DepartureOutcome {
  double departed_mb = 0.0;
  std::vector<Batch> removed;
};

/// Current shadow correlation of each vehicle, indexed by vehicle id;
/// nullopt once the vehicle has left coverage.
using ShadowLookup = std::span<const std::optional<double>>;

/// Bernoulli: one uniform draw per batch inside the window, even when the
/// probability is 0 or 1, so the draw count only depends on the queue.
/// Channel-gated: a batch departs when its owner's shadow correlation exceeds
/// the threshold or the owner is gone. No draws are consumed.
DepartureOutcome sample_departures(CacheQueue& queue, const DepartureModel& model, ShadowLookup shadow_corr,
                                   Rng& rng);

}  // namespace feel
