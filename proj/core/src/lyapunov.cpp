#include "feel/lyapunov.hpp"

#include <algorithm>
#include <stdexcept>

namespace feel {

CacheQueue::CacheQueue(double capacity_mb) : capacity_mb_(capacity_mb) {
  if (!(capacity_mb > 0.0)) throw std::invalid_argument("q_max_mb must be > 0");
}

void CacheQueue::enqueue(Batch batch) {
  backlog_mb_ += batch.size_mb;
  batches_.push_back(batch);
}

std::vector<Batch> CacheQueue::remove_flagged(const std::vector<bool>& departs) {
  std::vector<Batch> removed;
  std::deque<Batch> kept;
  for (std::size_t i = 0; i < batches_.size(); ++i) {
    if (i < departs.size() && departs[i])
      removed.push_back(batches_[i]);
    else
      kept.push_back(batches_[i]);
  }
  batches_ = std::move(kept);
  // recompute rather than subtract so the invariant holds bit-exactly
  backlog_mb_ = 0.0;
  for (const Batch& b : batches_) backlog_mb_ += b.size_mb;
  return removed;
}

void DriftPenaltyConfig::validate() const {
  if (!(tradeoff_v >= 0.0)) throw std::invalid_argument("tradeoff_v must be >= 0");
  if (!(batch_mb > 0.0)) throw std::invalid_argument("batch_mb must be > 0");
}

double queue_update(double q_mb, double arrivals_mb, double departures_mb) {
  return std::max(q_mb + arrivals_mb - departures_mb, 0.0);
}

double lyapunov_value(double q_mb) { return 0.5 * q_mb * q_mb; }

double arrivals_for(std::int64_t n, const DriftPenaltyConfig& cfg) { return cfg.batch_mb * static_cast<double>(n); }

double objective(std::int64_t n, double q_mb, double mu_mb, const DriftPenaltyConfig& cfg, const UtilityFn& utility) {
  return cfg.tradeoff_v * utility(n) + q_mb * (arrivals_for(n, cfg) - mu_mb);
}

std::int64_t optimal_n(double q_mb, std::int64_t available, double mu_est_mb, double q_max_mb,
                       const DriftPenaltyConfig& cfg, const UtilityFn& utility) {
  std::int64_t best_n = 0;
  double best = objective(0, q_mb, mu_est_mb, cfg, utility);
  for (std::int64_t n = 1; n <= available; ++n) {
    // feasibility is monotone in n: the first overflow ends the scan
    if (q_mb + arrivals_for(n, cfg) > q_max_mb) break;
    const double value = objective(n, q_mb, mu_est_mb, cfg, utility);
    if (value >= best) {
      best = value;
      best_n = n;
    }
  }
  return best_n;
}

void DepartureModel::validate() const {
  if (!(probability >= 0.0 && probability <= 1.0)) throw std::invalid_argument("departure_probability must lie in [0, 1]");
  if (!(window_mb >= 0.0)) throw std::invalid_argument("departure_window_mb must be >= 0");
  if (!(gate_threshold >= 0.0 && gate_threshold <= 1.0))
    throw std::invalid_argument("departure_gate_threshold must lie in [0, 1]");
}

DepartureOutcome sample_departures(CacheQueue& queue, const DepartureModel& model, ShadowLookup shadow_corr,
                                   Rng& rng) {
  const auto& batches = queue.batches();
  std::vector<bool> departs;
  departs.reserve(batches.size());
  double scanned_mb = 0.0;
  for (const Batch& b : batches) {
    if (model.window_mb > 0.0 && scanned_mb + b.size_mb > model.window_mb) break;
    scanned_mb += b.size_mb;
    bool go = false;
    if (model.kind == DepartureKind::bernoulli) {
      go = uniform(rng, 0.0, 1.0) < model.probability;
    } else {
      const auto idx = to_index(b.owner);
      go = idx >= shadow_corr.size() || !shadow_corr[idx] || *shadow_corr[idx] > model.gate_threshold;
    }
    departs.push_back(go);
  }
  DepartureOutcome out;
  out.removed = queue.remove_flagged(departs);
  for (const Batch& b : out.removed) out.departed_mb += b.size_mb;
  return out;
}

}  // namespace feel
