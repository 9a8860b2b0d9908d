#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cake/protocols/aristo_prop.hpp"
#include "cake/protocols/baselines.hpp"
#include "cake/protocols/sym_prop.hpp"
#include "cake/protocols/symmetric_envy_free.hpp"

namespace cake {

struct ProtocolInfo {
  std::string name;
  std::size_t min_players;
  std::size_t max_players;  // 0: unbounded
};

inline const std::vector<ProtocolInfo>& protocols() {
  static const std::vector<ProtocolInfo> all{
      {"cut-and-choose", 2, 2}, {"last-diminisher", 1, 0}, {"even-paz", 1, 0}, {"selfridge-conway", 3, 3},
      {"kuhn", 1, 0},           {"aristoprop", 1, 0},      {"symprop", 1, 0},  {"sym-envy-free", 1, 3},
  };
  return all;
}

// Looks a protocol up by its command-line name. Throws DomainError for
// unknown names and CapabilityError for unsupported player counts.
inline Procedure protocol_by_name(std::string_view name, std::size_t n_players) {
  const ProtocolInfo* info = nullptr;
  for (const auto& p : protocols())
    if (p.name == name) info = &p;
  if (!info) throw DomainError("unknown algorithm '" + std::string(name) + "'");
  if (n_players < info->min_players || (info->max_players && n_players > info->max_players))
    throw CapabilityError(info->name + " does not support " + std::to_string(n_players) + " players");
  if (name == "cut-and-choose") return cut_and_choose;
  if (name == "last-diminisher") return last_diminisher;
  if (name == "even-paz") return even_paz;
  if (name == "selfridge-conway") return selfridge_conway;
  if (name == "kuhn") return kuhn;
  if (name == "aristoprop") return [](std::span<const Valuation> vs) { return aristo_prop(vs); };
  if (name == "symprop") return [](std::span<const Valuation> vs) { return sym_prop(vs); };
  return [](std::span<const Valuation> vs) { return symmetric_envy_free(vs); };
}

}  // namespace cake
