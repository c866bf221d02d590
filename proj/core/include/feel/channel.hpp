#pragma once

#include <span>

namespace feel {

enum class CommQualityMode { literal, normalized };

/// Radio constants shared by every vehicle of one server. Defaults are the
/// reference scenario: 2.5 GHz carrier, exponent 3, 50 m mast.
struct RadioEnvironment {
  double carrier_freq_mhz = 2500.0;
  double path_loss_exp = 3.0;
  double server_height_m = 50.0;
  double connection_factor = 5.6e6;
  double signal_variance = 7.5;  // dB^2
  double light_speed_mps = 3.0e8;
  double noise_min = 0.0;
  double noise_max = 1.0;
  // epsilon of the shadow-fading correlation, drawn i.i.d. per vehicle and slot
  double shadow_eps_min = 0.3;
  double shadow_eps_max = 0.9;
  CommQualityMode comm_quality_mode = CommQualityMode::normalized;
  double power_floor_db = -300.0;
  double d_min_m = 1.0;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

struct ChannelSnapshot {
  double doppler_hz = 0.0;
  double path_loss_db = 0.0;
  double shadow_corr = 0.0;
  double tx_rate = 0.0;
  double tx_power_linear = 0.0;
  double comm_quality = 0.0;  // literal value; normalization happens per slot
  double tx_energy = 0.0;
};

double wavelength(const RadioEnvironment& env);
double doppler(const RadioEnvironment& env, double speed_mps, double dist_m);

/// ITU-R form 20 lg(f + f_d) + 10 N lg(dist) - 28, f and f_d in MHz.
double path_loss(const RadioEnvironment& env, double doppler_hz, double dist_m);

/// eps^(v / dist). Throws for eps outside (0, 1].
double shadow_correlation(double eps, double speed_mps, double dist_m);

double tx_rate(const RadioEnvironment& env, double shadow_corr);
double tx_power(const RadioEnvironment& env, double rate);

/// (P_dB - L_dB) * noise with P_dB = 10 lg(power), floored for zero power.
double comm_quality(const RadioEnvironment& env, double power_linear, double path_loss_db, double noise);

double tx_energy(double data_mb, double power_linear, const RadioEnvironment& env);
double update_energy(double prev_energy, double tx_energy);

/// Runs the whole chain for one vehicle given this slot's draws.
ChannelSnapshot compute_snapshot(const RadioEnvironment& env, double speed_mps, double dist_m, double eps,
                                 double noise, double batch_mb);

/// Min-max rescale to [0, 1] in place; a constant input maps to all ones.
void normalize_comm_quality(std::span<double> values);

}  // namespace feel
