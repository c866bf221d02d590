#include "feel/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace feel {

std::string format_number(double value) {
  // fixed notation, shortest digits that round-trip
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("csv: bad number '" + std::string(text) + "'");
  return v;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("csv: bad integer '" + std::string(text) + "'");
  return v;
}

template <typename Row, typename ParseRow>
std::vector<Row> read_rows(std::istream& in, std::string_view header, std::size_t columns, ParseRow parse_row) {
  std::string line;
  if (!std::getline(in, line) || line != header) throw std::invalid_argument("csv: unexpected header");
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != columns) throw std::invalid_argument("csv: wrong column count in '" + line + "'");
    rows.push_back(parse_row(f));
  }
  return rows;
}

}  // namespace

void write_server_csv(std::ostream& out, const ServerTrace& trace) {
  out << kServerCsvHeader << '\n';
  for (const SlotMetrics& r : trace.rows) {
    out << r.slot << ',' << r.server_id << ',' << scheme_name(r.scheme) << ',' << format_number(r.queue_backlog_mb)
        << ',' << r.n_star << ',' << r.n_selected << ',' << format_number(r.arrivals_mb) << ','
        << format_number(r.departures_mb) << ',' << r.cumulative_selected << ','
        << format_number(r.cumulative_trained_mb) << ',' << format_number(r.accuracy) << ','
        << format_number(r.loss) << ',' << r.active_vehicles << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << kAggregateCsvHeader << '\n';
  for (const AggregateRow& r : rows) {
    out << r.slot << ',' << scheme_name(r.scheme) << ',' << format_number(r.queue_backlog_mb) << ','
        << format_number(r.n_star) << ',' << format_number(r.n_selected) << ',' << format_number(r.arrivals_mb)
        << ',' << format_number(r.departures_mb) << ',' << format_number(r.cumulative_selected) << ','
        << format_number(r.cumulative_trained_mb) << ',' << format_number(r.accuracy) << ','
        << format_number(r.loss) << ',' << format_number(r.active_vehicles) << '\n';
  }
}

std::vector<SlotMetrics> read_server_csv(std::istream& in) {
  return read_rows<SlotMetrics>(in, kServerCsvHeader, 13, [](const std::vector<std::string_view>& f) {
    SlotMetrics r;
    r.slot = parse_int(f[0]);
    r.server_id = parse_int(f[1]);
    r.scheme = parse_scheme(f[2]);
    r.queue_backlog_mb = parse_double(f[3]);
    r.n_star = parse_int(f[4]);
    r.n_selected = parse_int(f[5]);
    r.arrivals_mb = parse_double(f[6]);
    r.departures_mb = parse_double(f[7]);
    r.cumulative_selected = parse_int(f[8]);
    r.cumulative_trained_mb = parse_double(f[9]);
    r.accuracy = parse_double(f[10]);
    r.loss = parse_double(f[11]);
    r.active_vehicles = parse_int(f[12]);
    return r;
  });
}

std::vector<AggregateRow> read_aggregate_csv(std::istream& in) {
  return read_rows<AggregateRow>(in, kAggregateCsvHeader, 12, [](const std::vector<std::string_view>& f) {
    AggregateRow r;
    r.slot = parse_int(f[0]);
    r.scheme = parse_scheme(f[1]);
    r.queue_backlog_mb = parse_double(f[2]);
    r.n_star = parse_double(f[3]);
    r.n_selected = parse_double(f[4]);
    r.arrivals_mb = parse_double(f[5]);
    r.departures_mb = parse_double(f[6]);
    r.cumulative_selected = parse_double(f[7]);
    r.cumulative_trained_mb = parse_double(f[8]);
    r.accuracy = parse_double(f[9]);
    r.loss = parse_double(f[10]);
    r.active_vehicles = parse_double(f[11]);
    return r;
  });
}

}  // namespace feel
