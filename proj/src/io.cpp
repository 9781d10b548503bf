//------------------------------------------------------------------------------
//
//   Copyright 2026 the hetnet-auction authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "hetnet/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hetnet {

namespace {

using nlohmann::json;

json parse_json(std::istream& in, const char* what) {
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, std::string("malformed JSON in ") + what);
  return j;
}

Rat rat_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) return Rat(j.get<double>());  // exact binary value
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw Error(Errc::ParseError, std::string(what) + " must be a number or a numeric string");
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

int parse_int_field(const std::string& text, int line_no, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("bad ") + what + " '" + text + "'", line_no);
  }
}

Rat parse_rat_field(const std::string& text, int line_no, const char* what) {
  try {
    return rat_from_string(text);
  } catch (const Error&) {
    throw Error(Errc::ParseError, std::string("bad ") + what + " '" + text + "'", line_no);
  }
}

BidderKind parse_kind(const std::string& text, int line_no) {
  if (text == "UE" || text == "ue") return BidderKind::DirectUE;
  if (text == "RN" || text == "rn") return BidderKind::RelayNode;
  throw Error(Errc::ParseError, "bidder kind must be UE or RN, found '" + text + "'", line_no);
}

// Shared row loop: hands (fields, line_no) to `parse_row` for non-empty,
// non-comment rows; skips an optional header starting with "bidder_id".
template <class RowFn>
void for_each_csv_row(std::istream& in, RowFn&& parse_row) {
  std::string line;
  int line_no = 0;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (first_data_line && line.rfind("bidder_id", 0) == 0) {
      first_data_line = false;
      continue;
    }
    first_data_line = false;
    parse_row(split_csv(line), line_no);
  }
}

json rat_json(const Rat& value) { return rat_to_string(value); }

json rat_map_json(const std::map<int, Rat>& values) {
  json out = json::object();
  for (const auto& [id, value] : values) out[std::to_string(id)] = rat_json(value);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

SlotConfig load_config_json(std::istream& in) {
  const json j = parse_json(in, "config");
  if (!j.is_object()) throw Error(Errc::ParseError, "config must be a JSON object");
  SlotConfig config;
  if (!j.contains("num_rbs") || !j["num_rbs"].is_number_integer())
    throw Error(Errc::ParseError, "config needs an integer num_rbs");
  config.num_rbs = j["num_rbs"].get<int>();
  config.subband_size = j.value("subband_size", 1);
  if (j.contains("rate_table")) {
    const json& table = j["rate_table"];
    if (!table.is_array() || table.size() != CqiRateTable::kLevels)
      throw Error(Errc::ParseError, "rate_table must hold exactly 16 entries");
    std::array<Rat, CqiRateTable::kLevels> rates;
    for (int c = 0; c < CqiRateTable::kLevels; ++c)
      rates[static_cast<size_t>(c)] = rat_from_json(table[static_cast<size_t>(c)], "rate_table entry");
    config.rates = CqiRateTable(std::move(rates));
  }
  if (config.num_rbs < 1 || config.subband_size < 1 ||
      config.num_rbs % config.subband_size != 0)
    throw Error(Errc::BadConfig, "num_rbs must be a positive multiple of subband_size");
  return config;
}

SlotConfig load_config_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_config_json(in);
}

std::vector<Bid> load_basic_bids_csv(std::istream& in) {
  std::vector<Bid> bids;
  for_each_csv_row(in, [&](const std::vector<std::string>& fields, int line_no) {
    if (fields.size() != 4)
      throw Error(Errc::ParseError, "expected bidder_id,kind,demand_r,value", line_no);
    Bid bid;
    bid.bidder_id = parse_int_field(fields[0], line_no, "bidder id");
    bid.kind = parse_kind(fields[1], line_no);
    bid.demand_rbs = parse_int_field(fields[2], line_no, "demand");
    bid.value = parse_rat_field(fields[3], line_no, "value");
    bids.push_back(std::move(bid));
  });
  return bids;
}

std::vector<Bid> load_basic_bids_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_basic_bids_csv(in);
}

std::vector<ExtendedBid> load_extended_bids_csv(std::istream& in) {
  std::vector<ExtendedBid> bids;
  for_each_csv_row(in, [&](const std::vector<std::string>& fields, int line_no) {
    if (fields.size() < 5)
      throw Error(Errc::ParseError, "expected bidder_id,kind,demand_r,unit_value,cqi_0,...",
                  line_no);
    ExtendedBid bid;
    bid.bidder_id = parse_int_field(fields[0], line_no, "bidder id");
    bid.kind = parse_kind(fields[1], line_no);
    bid.demand_rbs = parse_int_field(fields[2], line_no, "demand");
    bid.unit_value = parse_rat_field(fields[3], line_no, "unit value");
    for (size_t i = 4; i < fields.size(); ++i) {
      const int c = parse_int_field(fields[i], line_no, "CQI");
      if (c < 0 || c >= CqiRateTable::kLevels)
        throw Error(Errc::CqiOutOfRange, "CQI " + std::to_string(c) + " outside [0,15]", line_no);
      bid.cqi.push_back(c);
    }
    bids.push_back(std::move(bid));
  });
  return bids;
}

std::vector<ExtendedBid> load_extended_bids_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_extended_bids_csv(in);
}

ScenarioSpec load_scenario_json(std::istream& in) {
  const json j = parse_json(in, "scenario");
  if (!j.is_object()) throw Error(Errc::ParseError, "scenario must be a JSON object");
  ScenarioSpec spec;
  spec.num_slots = j.value("num_slots", spec.num_slots);
  spec.slot_ms = j.value("slot_ms", spec.slot_ms);
  spec.num_direct_ues = j.value("num_direct_ues", spec.num_direct_ues);
  spec.num_rns = j.value("num_rns", spec.num_rns);
  spec.rn_served_min = j.value("rn_served_min", spec.rn_served_min);
  spec.rn_served_max = j.value("rn_served_max", spec.rn_served_max);
  spec.demand_min = j.value("demand_min", spec.demand_min);
  spec.demand_max = j.value("demand_max", spec.demand_max);
  if (j.contains("base_unit_price"))
    spec.base_unit_price = rat_from_json(j["base_unit_price"], "base_unit_price");
  if (j.contains("price_noise_min"))
    spec.price_noise_min = rat_from_json(j["price_noise_min"], "price_noise_min");
  if (j.contains("price_noise_max"))
    spec.price_noise_max = rat_from_json(j["price_noise_max"], "price_noise_max");
  spec.rng_seed = j.value("rng_seed", spec.rng_seed);
  return spec;
}

ScenarioSpec load_scenario_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_scenario_json(in);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string auction_result_to_json(const AuctionResult& result, int indent) {
  json j;
  json winners = json::array();
  for (const auto& [id, won] : result.allocation.winners)
    if (won) winners.push_back(id);
  j["winners"] = winners;

  json assignment = json::object();
  for (const auto& [id, rbs] : result.allocation.assignment)
    if (!rbs.empty()) assignment[std::to_string(id)] = rbs;
  j["assignment"] = assignment;
  j["reserved"] = result.allocation.reserved;

  j["payments"] = rat_map_json(result.payments);
  j["charges"] = rat_map_json(result.charges);
  j["welfare"] = rat_json(result.social_welfare);
  j["welfare_double"] = result.social_welfare.get_d();

  json duals;
  duals["lambda"] = result.duals.lambda;
  json rho = json::object();
  for (const auto& [id, value] : result.duals.rho) rho[std::to_string(id)] = value;
  duals["rho"] = rho;
  duals["xi"] = rat_map_json(result.duals.xi);
  duals["iterations"] = result.duals.iterations;
  j["duals"] = duals;
  return j.dump(indent);
}

std::string metrics_to_csv(const SimulationResult& result) {
  std::ostringstream out;
  auto emit_double = [&](const std::optional<double>& value) {
    if (value) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", *value);
      out << buf;
    }
  };
  out << "slot,num_bidders,welfare,welfare_opt,ratio,alpha_bound,throughput_bits,num_winners,"
         "reserved_rbs\n";
  for (const SlotMetrics& m : result.slots) {
    out << m.slot << ',' << m.num_bidders << ',' << rat_to_string(m.welfare) << ',';
    if (m.welfare_opt) out << rat_to_string(*m.welfare_opt);
    out << ',';
    emit_double(m.ratio);
    out << ',';
    emit_double(m.alpha_bound);
    out << ',' << rat_to_string(m.throughput_bits) << ',' << m.num_winners << ','
        << m.reserved_rbs << '\n';
  }
  return out.str();
}

std::string summary_to_json(const SimulationResult& result, int indent) {
  const SimulationSummary& s = result.summary;
  json j;
  j["num_slots"] = s.num_slots;
  j["total_welfare"] = rat_json(s.total_welfare);
  j["mean_welfare"] = rat_json(s.mean_welfare);
  j["mean_welfare_double"] = s.mean_welfare.get_d();
  j["total_throughput_bits"] = rat_json(s.total_throughput_bits);
  j["mean_throughput_bits"] = rat_json(s.mean_throughput_bits);
  j["mean_throughput_bits_double"] = s.mean_throughput_bits.get_d();
  if (s.min_ratio) j["min_ratio"] = *s.min_ratio;
  if (s.mean_ratio) j["mean_ratio"] = *s.mean_ratio;
  j["per_bidder_throughput"] = rat_map_json(s.per_bidder_throughput);
  j["per_bidder_payment"] = rat_map_json(s.per_bidder_payment);
  j["timing"] = {{"mean_runtime_us", s.mean_runtime_us}};
  return j.dump(indent);
}

}  // namespace hetnet
