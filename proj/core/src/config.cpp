#include "feel/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "feel/csv.hpp"

namespace feel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw std::invalid_argument("config key '" + std::string(key) + "': cannot parse '" + std::string(value) + "' as " +
                              std::string(expected));
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) bad_value(key, v, "a number");
  return out;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view v) {
  Int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) bad_value(key, v, "an integer");
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  bad_value(key, v, "a boolean");
}

struct Entry {
  std::string_view key;
  std::function<void(SimConfig&, std::string_view key, std::string_view value)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <typename Member>
Entry number(std::string_view key, Member member) {
  return {key,
          [member](SimConfig& c, std::string_view k, std::string_view v) { std::invoke(member, c) = to_double(k, v); },
          [member](const SimConfig& c) { return format_number(std::invoke(member, c)); }};
}

template <typename Int, typename Member>
Entry integer(std::string_view key, Member member) {
  return {key,
          [member](SimConfig& c, std::string_view k, std::string_view v) { std::invoke(member, c) = to_int<Int>(k, v); },
          [member](const SimConfig& c) { return std::to_string(std::invoke(member, c)); }};
}

Entry boolean(std::string_view key, bool SimConfig::*member) {
  return {key, [member](SimConfig& c, std::string_view k, std::string_view v) { c.*member = to_bool(k, v); },
          [member](const SimConfig& c) { return std::string(c.*member ? "true" : "false"); }};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back(integer<std::int64_t>("n_vehicles", &SimConfig::n_vehicles));
    t.push_back(number("span_d_m", &SimConfig::span_d_m));
    t.push_back(number("radius_r_m", &SimConfig::radius_r_m));
    t.push_back(number("height_h_m", [](auto& c) -> auto& { return c.radio.server_height_m; }));
    t.push_back(number("q_max_mb", &SimConfig::q_max_mb));
    t.push_back(number("tradeoff_v", &SimConfig::tradeoff_v));
    t.push_back(number("batch_mb", &SimConfig::batch_mb));
    t.push_back(number("slot_seconds", &SimConfig::slot_seconds));
    t.push_back(integer<std::int64_t>("data_items_per_vehicle", &SimConfig::data_items_per_vehicle));
    t.push_back(number("item_mb", &SimConfig::item_mb));
    t.push_back(number("energy_init_min", &SimConfig::energy_init_min));
    t.push_back(number("energy_init_max", &SimConfig::energy_init_max));
    t.push_back(number("energy_scale", &SimConfig::energy_scale));
    t.push_back(number("speed_mean_mps", &SimConfig::speed_mean_mps));
    t.push_back(number("speed_variance", &SimConfig::speed_variance));
    t.push_back(number("speed_min_mps", &SimConfig::speed_min_mps));
    t.push_back(number("speed_max_mps", &SimConfig::speed_max_mps));
    t.push_back(number("carrier_freq_mhz", [](auto& c) -> auto& { return c.radio.carrier_freq_mhz; }));
    t.push_back(number("path_loss_exp", [](auto& c) -> auto& { return c.radio.path_loss_exp; }));
    t.push_back(number("connection_factor", [](auto& c) -> auto& { return c.radio.connection_factor; }));
    t.push_back(number("signal_variance", [](auto& c) -> auto& { return c.radio.signal_variance; }));
    t.push_back(number("light_speed_mps", [](auto& c) -> auto& { return c.radio.light_speed_mps; }));
    t.push_back(number("noise_min", [](auto& c) -> auto& { return c.radio.noise_min; }));
    t.push_back(number("noise_max", [](auto& c) -> auto& { return c.radio.noise_max; }));
    t.push_back(number("shadow_eps_min", [](auto& c) -> auto& { return c.radio.shadow_eps_min; }));
    t.push_back(number("shadow_eps_max", [](auto& c) -> auto& { return c.radio.shadow_eps_max; }));
    t.push_back({"comm_quality_mode",
                 [](SimConfig& c, std::string_view k, std::string_view v) {
                   if (v == "literal") c.radio.comm_quality_mode = CommQualityMode::literal;
                   else if (v == "normalized") c.radio.comm_quality_mode = CommQualityMode::normalized;
                   else bad_value(k, v, "literal|normalized");
                 },
                 [](const SimConfig& c) {
                   return std::string(c.radio.comm_quality_mode == CommQualityMode::literal ? "literal" : "normalized");
                 }});
    t.push_back(number("power_floor_db", [](auto& c) -> auto& { return c.radio.power_floor_db; }));
    t.push_back(number("d_min_m", [](auto& c) -> auto& { return c.radio.d_min_m; }));
    t.push_back(number("learning_rate", [](auto& c) -> auto& { return c.curve.learning_rate; }));
    t.push_back(number("decay_rate", [](auto& c) -> auto& { return c.curve.decay_rate; }));
    t.push_back({"utility_basis",
                 [](SimConfig& c, std::string_view k, std::string_view v) {
                   if (v == "slot") c.utility_basis = UtilityBasis::slot;
                   else if (v == "cumulative") c.utility_basis = UtilityBasis::cumulative;
                   else bad_value(k, v, "slot|cumulative");
                 },
                 [](const SimConfig& c) {
                   return std::string(c.utility_basis == UtilityBasis::slot ? "slot" : "cumulative");
                 }});
    t.push_back({"scheme",
                 [](SimConfig& c, std::string_view k, std::string_view v) {
                   try {
                     c.scheme.kind = parse_scheme(v);
                   } catch (const std::invalid_argument&) {
                     bad_value(k, v, "proposed|maximum|static|random");
                   }
                 },
                 [](const SimConfig& c) { return std::string(scheme_name(c.scheme.kind)); }});
    t.push_back(integer<std::int64_t>("static_count", [](auto& c) -> auto& { return c.scheme.static_count; }));
    t.push_back({"departure_model",
                 [](SimConfig& c, std::string_view k, std::string_view v) {
                   if (v == "bernoulli") c.departure.kind = DepartureKind::bernoulli;
                   else if (v == "channel-gated") c.departure.kind = DepartureKind::channel_gated;
                   else bad_value(k, v, "bernoulli|channel-gated");
                 },
                 [](const SimConfig& c) {
                   return std::string(c.departure.kind == DepartureKind::bernoulli ? "bernoulli" : "channel-gated");
                 }});
    t.push_back(number("departure_probability", [](auto& c) -> auto& { return c.departure.probability; }));
    t.push_back(number("departure_window_mb", [](auto& c) -> auto& { return c.departure.window_mb; }));
    t.push_back(number("departure_gate_threshold", [](auto& c) -> auto& { return c.departure.gate_threshold; }));
    t.push_back(integer<std::int64_t>("n_servers", &SimConfig::n_servers));
    t.push_back(integer<std::int64_t>("max_slots", &SimConfig::max_slots));
    t.push_back(integer<std::uint64_t>("master_seed", &SimConfig::master_seed));
    t.push_back(boolean("respawn", &SimConfig::respawn));
    t.push_back(boolean("stop_when_drained", &SimConfig::stop_when_drained));
    return t;
  }();
  return table;
}

}  // namespace

std::pair<std::string, std::string> split_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(text) + "'");
  return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
}

void apply_setting(SimConfig& cfg, std::string_view key, std::string_view value) {
  for (const Entry& e : entries()) {
    if (e.key == key) {
      e.set(cfg, key, value);
      return;
    }
  }
  throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

SimConfig parse_config_text(std::string_view text, const Overrides& overrides) {
  SimConfig cfg;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find('=') == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const auto [key, value] = split_override(line);
    apply_setting(cfg, key, value);
  }
  for (const auto& [key, value] : overrides) apply_setting(cfg, key, value);
  cfg.validate();
  return cfg;
}

SimConfig parse_config(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), overrides);
}

std::string to_config_text(const SimConfig& cfg) {
  std::string out;
  for (const Entry& e : entries()) {
    out += e.key;
    out += " = ";
    out += e.get(cfg);
    out += '\n';
  }
  return out;
}

std::vector<std::string_view> config_keys() {
  std::vector<std::string_view> keys;
  for (const Entry& e : entries()) keys.push_back(e.key);
  return keys;
}

}  // namespace feel
