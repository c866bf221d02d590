#pragma once

#include <cstdint>

namespace feel {

enum class UtilityBasis { slot, cumulative };

struct CurveParams {
  double learning_rate = 1.0;
  double decay_rate = -0.3;
};

/// Learning-curve accuracy 1 - l_rate * x^d_rate for x >= 1 MB, and 0 below
/// that (the curve is singular at x -> 0 for negative decay).
double expected_accuracy(double x_mb, const CurveParams& curve);

/// Accuracy gained from uploading n batches on top of `base_mb` of data
/// (0 for the per-slot basis).
double slot_utility(std::int64_t n, double batch_mb, const CurveParams& curve, double base_mb = 0.0);

struct TrainingRecord {
  double accuracy = 0.0;
  double loss = 1.0;
};

/// Accuracy surrogate over the data trained so far on one server.
class LearningCurve {
 public:
  explicit LearningCurve(CurveParams params = {}) : params_(params) {}

  TrainingRecord record_training(double trained_mb);

  double cumulative_mb() const noexcept { return cumulative_mb_; }
  const CurveParams& params() const noexcept { return params_; }

 private:
  CurveParams params_;
  double cumulative_mb_ = 0.0;
};

}  // namespace feel
