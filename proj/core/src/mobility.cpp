#include "feel/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace feel {

namespace {

double gaussian_window_mass(double mean, double variance, double lo, double hi) {
  if (variance == 0.0) return (mean >= lo && mean <= hi) ? 1.0 : 0.0;
  const double scale = std::sqrt(2.0 * variance);
  return 0.5 * (std::erf((hi - mean) / scale) - std::erf((lo - mean) / scale));
}

}  // namespace

SpeedDistribution::SpeedDistribution(double mean_mps, double variance, double v_min, double v_max)
    : mean_(mean_mps), variance_(variance), v_min_(v_min), v_max_(v_max), mass_(0.0) {
  if (!(v_min <= v_max)) throw std::invalid_argument("speed distribution: v_min must not exceed v_max");
  if (!(variance >= 0.0)) throw std::invalid_argument("speed distribution: variance must be >= 0");
  if (!std::isfinite(mean_mps)) throw std::invalid_argument("speed distribution: mean must be finite");
  mass_ = v_min == v_max ? 1.0 : gaussian_window_mass(mean_mps, variance, v_min, v_max);
  if (mass_ < 1e-9) {
    throw std::invalid_argument("speed distribution: truncation window [" + std::to_string(v_min) + ", " +
                                std::to_string(v_max) + "] carries no probability mass");
  }
}

double sample_speed(const SpeedDistribution& dist, Rng& rng) {
  if (dist.v_min() == dist.v_max()) return dist.v_min();
  if (dist.variance() == 0.0) return dist.mean();
  std::normal_distribution<double> parent(dist.mean(), std::sqrt(dist.variance()));
  for (;;) {
    const double v = parent(rng);
    if (v >= dist.v_min() && v <= dist.v_max()) return v;
  }
}

CoverageGeometry::CoverageGeometry(double span_m, double radius_m, double server_height_m)
    : span_(span_m), radius_(radius_m), height_(server_height_m) {
  if (!(span_m > 0.0)) throw std::invalid_argument("coverage: span_d_m must be > 0");
  if (std::abs(span_m - 2.0 * radius_m) > 1e-9 * span_m)
    throw std::invalid_argument("coverage: span_d_m must equal 2 * radius_r_m");
  if (!(server_height_m > 0.0)) throw std::invalid_argument("coverage: height_h_m must be > 0");
}

bool compute_active(const VehicleState& v, const CoverageGeometry& geom) noexcept {
  return v.survivability_s > 0.0 && v.remaining_energy > 0.0 && v.position_m <= geom.span();
}

double initial_survivability(const CoverageGeometry& geom, double initial_position_m, double speed_mps) {
  if (!(speed_mps > 0.0)) throw std::invalid_argument("initial_survivability: speed must be > 0");
  if (initial_position_m < 0.0 || initial_position_m > geom.span())
    throw std::invalid_argument("initial_survivability: position outside [0, D]");
  return (geom.span() - initial_position_m) / speed_mps;
}

VehicleState advance_slot(VehicleState v, double slot_s, const CoverageGeometry& geom) {
  v.position_m += v.speed_mps * slot_s;
  double left = v.survivability_s - slot_s;
  // absorb rounding left over from repeated subtraction
  if (left < slot_s * 1e-9) left = 0.0;
  v.survivability_s = left;
  v.active = compute_active(v, geom);
  return v;
}

double distance_to_server(const CoverageGeometry& geom, double position_m, double d_min_m) {
  return std::max(std::abs(position_m - geom.server_position()), d_min_m);
}

}  // namespace feel
