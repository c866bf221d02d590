#include "feel/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace feel {

void RadioEnvironment::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(carrier_freq_mhz > 0.0, "carrier_freq_mhz must be > 0");
  require(path_loss_exp > 0.0, "path_loss_exp must be > 0");
  require(server_height_m > 0.0, "height_h_m must be > 0");
  require(connection_factor > 0.0, "connection_factor must be > 0");
  require(signal_variance >= 0.0, "signal_variance must be >= 0");
  require(light_speed_mps > 0.0, "light_speed_mps must be > 0");
  require(noise_min >= 0.0 && noise_max <= 1.0 && noise_min <= noise_max, "noise range must lie within [0, 1]");
  require(shadow_eps_min > 0.0 && shadow_eps_max <= 1.0 && shadow_eps_min <= shadow_eps_max,
          "shadow_eps range must lie within (0, 1]");
  require(std::isfinite(power_floor_db), "power_floor_db must be finite");
  require(d_min_m > 0.0, "d_min_m must be > 0");
}

double wavelength(const RadioEnvironment& env) {
  return env.light_speed_mps / (env.carrier_freq_mhz * 1e6);
}

double doppler(const RadioEnvironment& env, double speed_mps, double dist_m) {
  const double h = env.server_height_m;
  const double cos_theta = dist_m / std::sqrt(h * h + dist_m * dist_m);
  return speed_mps / wavelength(env) * cos_theta;
}

double path_loss(const RadioEnvironment& env, double doppler_hz, double dist_m) {
  const double f_mhz = env.carrier_freq_mhz + doppler_hz * 1e-6;
  return 20.0 * std::log10(f_mhz) + 10.0 * env.path_loss_exp * std::log10(dist_m) - 28.0;
}

double shadow_correlation(double eps, double speed_mps, double dist_m) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("shadow_correlation: eps must lie in (0, 1]");
  return std::pow(eps, speed_mps / dist_m);
}

double tx_rate(const RadioEnvironment& env, double shadow_corr) { return env.signal_variance * shadow_corr; }

double tx_power(const RadioEnvironment& env, double rate) {
  const double r = rate / env.connection_factor;
  return r * r;
}

double comm_quality(const RadioEnvironment& env, double power_linear, double path_loss_db, double noise) {
  const double p_db = power_linear > 0.0 ? std::max(10.0 * std::log10(power_linear), env.power_floor_db)
                                         : env.power_floor_db;
  return (p_db - path_loss_db) * noise;
}

double tx_energy(double data_mb, double power_linear, const RadioEnvironment& env) {
  return data_mb * std::sqrt(power_linear) / env.connection_factor;
}

double update_energy(double prev_energy, double tx_energy) { return std::max(prev_energy - tx_energy, 0.0); }

ChannelSnapshot compute_snapshot(const RadioEnvironment& env, double speed_mps, double dist_m, double eps,
                                 double noise, double batch_mb) {
  ChannelSnapshot s;
  s.doppler_hz = doppler(env, speed_mps, dist_m);
  s.path_loss_db = path_loss(env, s.doppler_hz, dist_m);
  s.shadow_corr = shadow_correlation(eps, speed_mps, dist_m);
  s.tx_rate = tx_rate(env, s.shadow_corr);
  s.tx_power_linear = tx_power(env, s.tx_rate);
  s.comm_quality = comm_quality(env, s.tx_power_linear, s.path_loss_db, noise);
  s.tx_energy = tx_energy(batch_mb, s.tx_power_linear, env);
  return s;
}

void normalize_comm_quality(std::span<double> values) {
  if (values.empty()) return;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  for (double& v : values) v = range > 0.0 ? (v - lo) / range : 1.0;
}

}  // namespace feel
