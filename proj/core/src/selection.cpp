#include "feel/selection.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace feel {

std::string_view scheme_name(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::proposed: return "proposed";
    case SchemeKind::maximum: return "maximum";
    case SchemeKind::static_k: return "static";
    case SchemeKind::random_n: return "random";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "proposed") return SchemeKind::proposed;
  if (name == "maximum") return SchemeKind::maximum;
  if (name == "static") return SchemeKind::static_k;
  if (name == "random") return SchemeKind::random_n;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected proposed|maximum|static|random)");
}

double priority(const ResourceStatus& s) {
  if (s.survivability_s == 0.0 || s.remaining_energy == 0.0) return 0.0;
  return (s.remaining_data_mb * s.comm_quality) / (s.remaining_energy * s.survivability_s);
}

bool is_eligible(const ResourceStatus& s, double batch_mb) noexcept {
  return s.active && s.remaining_data_mb >= batch_mb;
}

namespace {

std::vector<VehicleId> sample_uniform(const std::vector<VehicleId>& pool, std::int64_t count, Rng& rng) {
  std::vector<VehicleId> out;
  out.reserve(static_cast<std::size_t>(count));
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
  return out;
}

}  // namespace

SelectionDecision select(const Scheme& scheme, std::span<const ResourceStatus> statuses, std::int64_t n_star,
                         double batch_mb, Rng& rng, std::int64_t slot) {
  SelectionDecision d;
  d.slot = slot;
  d.n_star = n_star;

  switch (scheme.kind) {
    case SchemeKind::proposed: {
      struct Ranked {
        double weight;
        VehicleId id;
      };
      std::vector<Ranked> ranked;
      for (const auto& s : statuses)
        if (is_eligible(s, batch_mb)) ranked.push_back({priority(s), s.id});
      const auto take = static_cast<std::size_t>(std::clamp<std::int64_t>(n_star, 0, std::ssize(ranked)));
      std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take), ranked.end(),
                        [](const Ranked& a, const Ranked& b) {
                          if (a.weight != b.weight) return a.weight > b.weight;
                          return a.id < b.id;
                        });
      for (std::size_t i = 0; i < take; ++i) d.selected.push_back(ranked[i].id);
      break;
    }
    case SchemeKind::maximum:
    case SchemeKind::static_k:
    case SchemeKind::random_n: {
      std::vector<VehicleId> pool;
      for (const auto& s : statuses)
        if (is_eligible(s, batch_mb)) pool.push_back(s.id);
      if (scheme.kind == SchemeKind::maximum) {
        d.selected = std::move(pool);
      } else {
        const std::int64_t want = scheme.kind == SchemeKind::static_k ? scheme.static_count : n_star;
        d.selected = sample_uniform(pool, std::clamp<std::int64_t>(want, 0, std::ssize(pool)), rng);
      }
      break;
    }
  }
  d.arrivals_mb = batch_mb * static_cast<double>(d.selected.size());
  return d;
}

}  // namespace feel
