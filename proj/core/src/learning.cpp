#include "feel/learning.hpp"

#include <cmath>
#include <stdexcept>

namespace feel {

double expected_accuracy(double x_mb, const CurveParams& curve) {
  if (x_mb < 1.0) return 0.0;
  return 1.0 - curve.learning_rate * std::pow(x_mb, curve.decay_rate);
}

double slot_utility(std::int64_t n, double batch_mb, const CurveParams& curve, double base_mb) {
  return expected_accuracy(base_mb + batch_mb * static_cast<double>(n), curve);
}

TrainingRecord LearningCurve::record_training(double trained_mb) {
  if (!(trained_mb >= 0.0)) throw std::invalid_argument("record_training: trained_mb must be >= 0");
  cumulative_mb_ += trained_mb;
  TrainingRecord r;
  r.accuracy = expected_accuracy(cumulative_mb_, params_);
  r.loss = 1.0 - r.accuracy;
  return r;
}

}  // namespace feel
