#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cake/division.hpp"
#include "cake/partition_orders.hpp"
#include "cake/protocols/baselines.hpp"
#include "cake/protocols/common.hpp"

namespace cake {

using Procedure = std::function<Division(std::span<const Valuation>)>;

// A deterministic envy-free procedure and the player counts it handles.
struct EnvyFreeBase {
  std::string name;
  Procedure run;
  std::size_t min_players = 1;
  std::size_t max_players = 1;

  bool supports(std::size_t n) const { return min_players <= n && n <= max_players; }
};

inline Division whole_cake(std::span<const Valuation> vs) {
  if (vs.size() != 1) throw CapabilityError("whole-cake needs exactly 1 player");
  RunContext ctx(vs);
  return ctx.finish("whole-cake", Subcake::unit(), {Subcake::unit()});
}

// The shipped bases: trivial for one player, cut-and-choose for two,
// Selfridge-Conway for three.
inline EnvyFreeBase default_envy_free_base(std::size_t n) {
  switch (n) {
    case 1: return {"whole-cake", whole_cake, 1, 1};
    case 2: return {"cut-and-choose", cut_and_choose, 2, 2};
    case 3: return {"selfridge-conway", selfridge_conway, 3, 3};
    default:
      throw CapabilityError("no envy-free base procedure shipped for " + std::to_string(n) +
                            " players (supported: 1 to 3)");
  }
}

// All permutations of 0..n-1 in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// [μ_σ(1), ..., μ_σ(n)]
inline std::vector<Valuation> permuted(std::span<const Valuation> vs, const std::vector<std::size_t>& sigma) {
  std::vector<Valuation> out;
  out.reserve(sigma.size());
  for (std::size_t k : sigma) out.push_back(vs[k]);
  return out;
}

// Runs the base on every input order, maps each result back to the original
// players, and returns the first computed partition among those least in
// graded order of cut points and then in lexicographic order of words.
inline Division symmetric_envy_free(std::span<const Valuation> vs, const EnvyFreeBase& base) {
  const std::size_t n = vs.size();
  if (!base.supports(n))
    throw CapabilityError(base.name + " does not support " + std::to_string(n) + " players");
  RunContext ctx(vs);
  std::vector<Partition> candidates;
  for (const auto& sigma : all_permutations(n)) {
    auto order = permuted(vs, sigma);
    Division d = base.run(order);
    Partition p{d.ambient, std::vector<Subcake>(n)};
    for (std::size_t k = 0; k < n; ++k) p.pieces[sigma[k]] = d.pieces[k];
    ctx.ledger().absorb(d.ledger, sigma);
    candidates.push_back(std::move(p));
  }
  std::size_t pick = select_minimal_indices(candidates).front();
  return ctx.finish("sym-envy-free", candidates[pick].ambient, candidates[pick].pieces);
}

inline Division symmetric_envy_free(std::span<const Valuation> vs) {
  return symmetric_envy_free(vs, default_envy_free_base(vs.size()));
}

}  // namespace cake
