#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "romdom/solvers.hpp"

namespace romdom {

// Flat RunReport record: six named transition counters, contract log, potential trace.
inline nlohmann::json to_json(const RunReport& r) {
  using nlohmann::json;
  json contracts = json::array();
  for (const auto& k : r.contracts) {
    contracts.push_back({{"round", k.round}, {"proposer", k.proposer}, {"coalition", k.coalition}, {"gain", k.gain}});
  }
  return {{"algorithm", std::string(to_string(r.algorithm))},
          {"initial", r.initial.str()},
          {"final", r.final_profile.str()},
          {"weight", r.weight()},
          {"rounds_total", r.rounds_total},
          {"rounds_effective", r.rounds_effective},
          {"round_cap", r.round_cap},
          {"x01", r.x_counts(0, 1)},
          {"x02", r.x_counts(0, 2)},
          {"x10", r.x_counts(1, 0)},
          {"x12", r.x_counts(1, 2)},
          {"x20", r.x_counts(2, 0)},
          {"x21", r.x_counts(2, 1)},
          {"contracts", contracts},
          {"declined_contracts", r.declined_contracts},
          {"potential_trace", r.potential_trace}};
}

}  // namespace romdom
