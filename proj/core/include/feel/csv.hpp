#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "feel/simulator.hpp"

namespace feel {

inline constexpr std::string_view kServerCsvHeader =
    "slot,server_id,scheme,queue_backlog_mb,n_star,n_selected,arrivals_mb,departures_mb,"
    "cumulative_selected,cumulative_trained_mb,accuracy,loss,active_vehicles";

inline constexpr std::string_view kAggregateCsvHeader =
    "slot,scheme,queue_backlog_mb,n_star,n_selected,arrivals_mb,departures_mb,"
    "cumulative_selected,cumulative_trained_mb,accuracy,loss,active_vehicles";

/// Shortest plain decimal (no exponent) that parses back to the same double.
std::string format_number(double value);

void write_server_csv(std::ostream& out, const ServerTrace& trace);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Parses a per-server trace written by write_server_csv. Throws
/// std::invalid_argument on a header mismatch or malformed row.
std::vector<SlotMetrics> read_server_csv(std::istream& in);
std::vector<AggregateRow> read_aggregate_csv(std::istream& in);

}  // namespace feel
