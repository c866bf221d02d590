#pragma once

#include <cstdint>

#include "feel/rng.hpp"

namespace feel {

enum class VehicleId : std::uint32_t {};

constexpr std::uint32_t to_index(VehicleId id) noexcept { return static_cast<std::uint32_t>(id); }

/// Gaussian speed law truncated to [v_min, v_max].
class SpeedDistribution {
 public:
  /// Throws std::invalid_argument when v_min > v_max, variance < 0, or the
  /// window carries (numerically) no probability mass.
  SpeedDistribution(double mean_mps, double variance, double v_min, double v_max);

  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }
  double v_min() const noexcept { return v_min_; }
  double v_max() const noexcept { return v_max_; }

  /// Probability mass of the parent Gaussian inside the window.
  double window_mass() const noexcept { return mass_; }

 private:
  double mean_;
  double variance_;
  double v_min_;
  double v_max_;
  double mass_;
};

/// Rejection sampling from the parent Gaussian.
double sample_speed(const SpeedDistribution& dist, Rng& rng);

/// 1-D road segment [0, D] with the server mounted at its midpoint.
class CoverageGeometry {
 public:
  CoverageGeometry(double span_m, double radius_m, double server_height_m);

  double span() const noexcept { return span_; }
  double radius() const noexcept { return radius_; }
  double server_height() const noexcept { return height_; }
  double server_position() const noexcept { return span_ / 2.0; }

 private:
  double span_;
  double radius_;
  double height_;
};

struct VehicleState {
  VehicleId id{};
  double position_m = 0.0;
  double speed_mps = 0.0;
  std::int64_t remaining_items = 0;
  double remaining_energy = 0.0;
  double survivability_s = 0.0;
  bool active = false;
};

bool compute_active(const VehicleState& v, const CoverageGeometry& geom) noexcept;

/// Time left inside coverage for a vehicle entering at `initial_position_m`.
double initial_survivability(const CoverageGeometry& geom, double initial_position_m, double speed_mps);

/// Moves the vehicle one slot forward and burns one slot of survivability.
VehicleState advance_slot(VehicleState v, double slot_s, const CoverageGeometry& geom);

/// Horizontal separation to the server, clamped below at `d_min_m`.
double distance_to_server(const CoverageGeometry& geom, double position_m, double d_min_m = 1.0);

}  // namespace feel
