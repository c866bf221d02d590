#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "feel/channel.hpp"

namespace feel {
namespace {

RadioEnvironment reference() { return RadioEnvironment{}; }

TEST(Wavelength, HandValues) {
  auto env = reference();
  EXPECT_NEAR(wavelength(env), 0.12, 1e-15);
  env.carrier_freq_mhz = env.light_speed_mps / 1e6;
  EXPECT_DOUBLE_EQ(wavelength(env), 1.0);
  env.carrier_freq_mhz = 1250.0;
  EXPECT_NEAR(wavelength(env), 0.24, 1e-15);
}

TEST(Doppler, HandValues) {
  const auto env = reference();
  // cos(theta) = 100 / sqrt(50^2 + 100^2)
  const double cos_theta = 100.0 / std::sqrt(12500.0);
  EXPECT_NEAR(cos_theta, 0.8944, 1e-4);
  EXPECT_NEAR(doppler(env, 15.0, 100.0), 15.0 / 0.12 * cos_theta, 1e-9);
  EXPECT_NEAR(doppler(env, 15.0, 100.0), 111.8, 0.05);
  EXPECT_EQ(doppler(env, 0.0, 100.0), 0.0);
  // broadside: dist = d_min, h = 50
  EXPECT_NEAR(doppler(env, 15.0, 1.0), 125.0 * (1.0 / std::sqrt(2501.0)), 1e-9);
  EXPECT_NEAR(doppler(env, 15.0, 1.0), (15.0 / 0.12) * (1.0 / 50.0), 0.01);
}

TEST(PathLoss, HandValues) {
  const auto env = reference();
  EXPECT_NEAR(path_loss(env, 0.0, 1.0), 20.0 * std::log10(2500.0) - 28.0, 1e-12);
  EXPECT_NEAR(path_loss(env, 0.0, 1.0), 39.96, 0.01);
  EXPECT_NEAR(path_loss(env, 111.8, 100.0), 99.96, 0.01);
  EXPECT_NEAR(path_loss(env, 0.0, 200.0) - path_loss(env, 0.0, 100.0), 30.0 * std::log10(2.0), 1e-12);
}

TEST(PathLoss, StrictlyIncreasingInDistance) {
  const auto env = reference();
  double prev = path_loss(env, 100.0, 1.0);
  for (double d = 1.5; d < 600.0; d *= 1.1) {
    const double cur = path_loss(env, 100.0, d);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(ShadowCorrelation, HandValuesAndDomain) {
  EXPECT_EQ(shadow_correlation(1.0, 15.0, 100.0), 1.0);
  EXPECT_NEAR(shadow_correlation(0.5, 15.0, 100.0), 0.9013, 1e-4);
  EXPECT_LT(shadow_correlation(0.5, 1e5, 100.0), 1e-100);
  EXPECT_THROW(shadow_correlation(0.0, 15.0, 100.0), std::invalid_argument);
  EXPECT_THROW(shadow_correlation(-0.2, 15.0, 100.0), std::invalid_argument);
  EXPECT_THROW(shadow_correlation(1.5, 15.0, 100.0), std::invalid_argument);
}

TEST(ShadowCorrelation, BoundedAndIncreasingInDistance) {
  for (double eps : {0.05, 0.3, 0.6, 0.9}) {
    double prev = 0.0;
    for (double d = 1.0; d <= 500.0; d += 7.0) {
      const double a = shadow_correlation(eps, 15.0, d);
      EXPECT_GT(a, 0.0);
      EXPECT_LE(a, 1.0);
      EXPECT_GE(a, prev);
      prev = a;
    }
  }
}

TEST(RateAndPower, HandValues) {
  const auto env = reference();
  EXPECT_EQ(tx_rate(env, 0.0), 0.0);
  EXPECT_EQ(tx_rate(env, 1.0), 7.5);
  EXPECT_NEAR(tx_rate(env, 0.9013), 6.760, 1e-3);
  EXPECT_EQ(tx_power(env, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(tx_power(env, env.connection_factor), 1.0);
  EXPECT_NEAR(tx_power(env, 6.760) / 1.457e-12, 1.0, 1e-3);
}

TEST(CommQuality, HandValues) {
  const auto env = reference();
  EXPECT_EQ(comm_quality(env, 1.457e-12, 99.96, 0.0), 0.0);
  EXPECT_EQ(comm_quality(env, 1.0, 0.0, 0.5), 0.0);
  // 10 lg(1.457e-12) = -118.365
  EXPECT_NEAR(comm_quality(env, 1.457e-12, 99.96, 1.0), -218.325, 1e-2);
}

TEST(CommQuality, ZeroPowerUsesFloor) {
  const auto env = reference();
  EXPECT_DOUBLE_EQ(comm_quality(env, 0.0, 100.0, 1.0), -400.0);
  EXPECT_TRUE(std::isfinite(comm_quality(env, 1e-320, 100.0, 1.0)));
}

TEST(CommQuality, StrictlyDecreasingInPathLoss) {
  const auto env = reference();
  for (double noise : {0.1, 0.5, 1.0}) {
    EXPECT_GT(comm_quality(env, 1e-12, 40.0, noise), comm_quality(env, 1e-12, 41.0, noise));
  }
}

TEST(Energy, HandValues) {
  const auto env = reference();
  EXPECT_EQ(tx_energy(10.0, 0.0, env), 0.0);
  EXPECT_EQ(tx_energy(0.0, 1.457e-12, env), 0.0);
  EXPECT_NEAR(tx_energy(10.0, 1.457e-12, env), 2.155e-12, 1e-15);
  EXPECT_EQ(update_energy(50.0, 0.0), 50.0);
  EXPECT_EQ(update_energy(50.0, 50.0), 0.0);
  EXPECT_EQ(update_energy(10.0, 50.0), 0.0);
  EXPECT_EQ(update_energy(100.0, 2.155e-12), 100.0 - 2.155e-12);
}

TEST(Energy, ChainMonotoneInShadowCorrelation) {
  const auto env = reference();
  double prev = -1.0;
  for (double a = 0.0; a <= 1.0; a += 0.01) {
    const double e = tx_energy(10.0, tx_power(env, tx_rate(env, a)), env);
    EXPECT_GE(e, 0.0);
    EXPECT_GE(e, prev);
    prev = e;
  }
}

TEST(Snapshot, ComposesTheChain) {
  const auto env = reference();
  const auto s = compute_snapshot(env, 15.0, 100.0, 0.5, 1.0, 10.0);
  EXPECT_NEAR(s.doppler_hz, 111.8, 0.05);
  EXPECT_NEAR(s.path_loss_db, 99.96, 0.01);
  EXPECT_NEAR(s.shadow_corr, 0.9013, 1e-4);
  EXPECT_NEAR(s.tx_rate, 6.760, 1e-3);
  EXPECT_NEAR(s.tx_power_linear / 1.457e-12, 1.0, 1e-3);
  EXPECT_NEAR(s.comm_quality, -218.32, 0.02);
  EXPECT_NEAR(s.tx_energy / 2.155e-12, 1.0, 1e-3);
}

TEST(Normalize, MinMaxAndTies) {
  std::vector<double> v{-200.0, -100.0, -150.0};
  normalize_comm_quality(v);
  EXPECT_EQ(v, (std::vector<double>{0.0, 1.0, 0.5}));
  std::vector<double> same{-3.0, -3.0};
  normalize_comm_quality(same);
  EXPECT_EQ(same, (std::vector<double>{1.0, 1.0}));
  std::vector<double> empty;
  normalize_comm_quality(empty);
}

TEST(RadioEnvironment, Validation) {
  auto env = reference();
  EXPECT_NO_THROW(env.validate());
  env.noise_max = 1.5;
  EXPECT_THROW(env.validate(), std::invalid_argument);
  env = reference();
  env.shadow_eps_min = 0.0;
  EXPECT_THROW(env.validate(), std::invalid_argument);
  env = reference();
  env.carrier_freq_mhz = 0.0;
  EXPECT_THROW(env.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace feel
