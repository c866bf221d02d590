#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feel/mobility.hpp"
#include "feel/rng.hpp"

namespace feel {

enum class SchemeKind { proposed, maximum, static_k, random_n };

struct Scheme {
  SchemeKind kind = SchemeKind::proposed;
  std::int64_t static_count = 5;
};

/// Short name used on the command line and in CSV rows.
std::string_view scheme_name(SchemeKind kind) noexcept;
/// Accepts proposed | maximum | static | random. Throws std::invalid_argument.
SchemeKind parse_scheme(std::string_view name);

/// What a vehicle reports to the server at the start of a slot.
struct ResourceStatus {
  VehicleId id{};
  double remaining_data_mb = 0.0;
  double comm_quality = 0.0;
  double remaining_energy = 0.0;
  double survivability_s = 0.0;
  bool active = true;
};

struct SelectionDecision {
  std::int64_t slot = 0;
  std::int64_t n_star = 0;
  std::vector<VehicleId> selected;
  double arrivals_mb = 0.0;
};

/// (C_d * C_com) / (C_E * C_S), or 0 when energy or survivability is spent.
double priority(const ResourceStatus& status);

bool is_eligible(const ResourceStatus& status, double batch_mb) noexcept;

/// Picks the uploading vehicles for one slot.
///
/// - proposed: the min(n_star, eligible) highest priorities, ties to the lower id.
///   Consumes no randomness.
/// - random_n: min(n_star, eligible) vehicles uniformly without replacement.
/// - static_k: min(static_count, eligible) uniformly; n_star is ignored.
/// - maximum: every eligible vehicle; n_star is ignored.
///
/// Ineligible entries (inactive, or less than one batch of data) are skipped.
SelectionDecision select(const Scheme& scheme, std::span<const ResourceStatus> statuses, std::int64_t n_star,
                         double batch_mb, Rng& rng, std::int64_t slot = 0);

}  // namespace feel
