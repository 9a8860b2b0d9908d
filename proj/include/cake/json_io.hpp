#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cake/division.hpp"
#include "cake/error.hpp"
#include "cake/fairness.hpp"
#include "cake/valuation.hpp"

namespace cake {

using Json = nlohmann::ordered_json;

// Named players in input order; names are unique.
struct Instance {
  std::vector<NamedValuation> players;

  std::size_t size() const { return players.size(); }

  std::vector<Valuation> valuations() const {
    std::vector<Valuation> out;
    for (const auto& p : players) out.push_back(p.valuation);
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& p : players) out.push_back(p.name);
    return out;
  }
};

// A division read back from a file: no query trace, only the counts.
struct LoadedDivision {
  Division division;
  LedgerCounts counts;
};

Json to_json(const NamedValuation& v);

NamedValuation valuation_from_json(const Json& j);

Json to_json(const Instance& inst);

Instance instance_from_json(const Json& j);

Json parse_json_text(const std::string& text, const std::string& where);

Json read_json_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

Instance load_instance(const std::string& path);

Json to_json(const Division& d, const std::vector<std::string>& names);

// Pieces are matched to the instance's players by name. Stored values are
// ignored; verifiers recompute them.
LoadedDivision division_from_json(const Json& j, const Instance& inst);

Json to_json(const Witness& w, const std::vector<std::string>& names);

Json to_json(const FairnessReport& r, const std::vector<std::string>& names);

Json to_json(const SymmetrySweep& s, const std::string& algorithm, const std::vector<std::string>& names);

}  // namespace cake
