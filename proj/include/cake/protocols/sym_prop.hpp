#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cake/division.hpp"
#include "cake/protocols/aristo_prop.hpp"
#include "cake/protocols/common.hpp"

namespace cake {

namespace detail {

// Order-free total order on what the mediator has learned about a player
// in this call: the cut vector (graded order), then the evaluation row.
inline std::vector<std::size_t> signature_ranks(const std::vector<CutVector>& cuts,
                                                const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = cuts.size();
  auto less = [&](std::size_t a, std::size_t b) {
    if (auto c = graded_compare(cuts[a], cuts[b]); c != 0) return c < 0;
    return std::lexicographical_compare(rows[a].begin(), rows[a].end(), rows[b].begin(), rows[b].end());
  };
  std::vector<std::size_t> order = identity_order(n);
  std::sort(order.begin(), order.end(), less);
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t k = 1; k < n; ++k)
    rank[order[k]] = rank[order[k - 1]] + (less(order[k - 1], order[k]) ? 1 : 0);
  return rank;
}

inline void sym_step(RunContext& ctx, const std::vector<std::size_t>& players, const Subcake& X,
                     std::vector<Subcake>& pieces, std::size_t depth) {
  const std::size_t n = players.size();
  if (n == 0) return;
  if (n == 1) {
    pieces[players.front()] = X;
    return;
  }
  // Everyone cuts n equal pieces; the graded-least cut vector defines A_j.
  std::vector<CutVector> cuts;
  for (std::size_t p : players) cuts.push_back(equal_cut(ctx, p, X, n));
  std::size_t cutter = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (graded_compare(cuts[k], cuts[cutter]) < 0) cutter = k;
  const CutVector x = cuts[cutter];
  std::vector<Subcake> parts = pieces_from_boundaries(X, x);
  auto values = evaluation_grid(ctx, players, X, x);
  auto totals = known_totals(ctx, players, X);
  AcceptabilityMatrix m = build_acceptability(values, totals, n);
  AllocationSet S = enumerate_maximal_allocations(m, ctx.limits());
  if (S.cardinality == 0) throw InvariantViolation("symprop: empty maximal allocation");

  // E_A: matched players whose own cut vector is the chosen one.
  // N_A = sum of 2^j over their pieces; the least N_A wins.
  std::vector<bool> same_cut(n);
  for (std::size_t k = 0; k < n; ++k) same_cut[k] = cuts[k] == x;
  auto weight = [&](const Allocation& a) {
    std::uint64_t w = 0;
    for (const auto& pair : a.pairs)
      if (same_cut[pair.player]) w |= std::uint64_t{1} << pair.piece;
    return w;
  };
  std::uint64_t least = UINT64_MAX;
  for (const auto& a : S.allocations) least = std::min(least, weight(a));

  // Among allocations with the least N_A, pick by piece index and the
  // signature rank of the matched player, so the pick does not depend on
  // where players sit in the input list.
  auto rank = signature_ranks(cuts, values);
  const Allocation* best = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> best_key;
  for (const auto& a : S.allocations) {
    if (weight(a) != least) continue;
    std::vector<std::pair<std::size_t, std::size_t>> key;
    for (const auto& pair : a.pairs) key.emplace_back(pair.piece, rank[pair.player]);
    if (!best || key < best_key) {
      best = &a;
      best_key = std::move(key);
    }
  }
  const Allocation chosen = *best;

  RoundState round;
  round.depth = depth;
  round.players = players;
  round.cake = X;
  round.boundaries = x;
  round.player_cuts = cuts;
  round.values = values;
  round.chosen = chosen;
  round.allocation_count = S.size();
  round.piece_subset_count = S.distinct_piece_subsets();
  round.min_weight = least;
  for (std::size_t j = 0; j < n; ++j)
    if (least >> j & 1) round.support.push_back(j);

  // Pieces in J go to their players; the other matched pairs are regrouped
  // by identical evaluation rows and recurse on their own pieces.
  std::vector<bool> matched(n, false);
  std::vector<std::size_t> deferred, piece_of(n, 0);
  Subcake rest = X;
  const Rational eta(static_cast<long>(n));
  for (const auto& pair : chosen.pairs) {
    matched[pair.player] = true;
    piece_of[pair.player] = pair.piece;
    rest = rest.minus(parts[pair.piece]);
    bool flat = std::all_of(values[pair.player].begin(), values[pair.player].end(),
                            [&](const Rational& v) { return v == totals[pair.player] / eta; });
    if (flat != same_cut[pair.player]) round.reading_disagreements.push_back(players[pair.player]);
    if (least >> pair.piece & 1) {
      pieces[players[pair.player]] = parts[pair.piece];
      round.served.push_back(players[pair.player]);
    } else {
      deferred.push_back(pair.player);
    }
  }
  std::sort(deferred.begin(), deferred.end());
  std::sort(round.served.begin(), round.served.end());
  if (round.served.empty()) throw InvariantViolation("symprop: no player served in a round");
  auto groups = group_by_evaluation_vector(deferred, values);

  std::vector<std::size_t> unmatched;
  for (std::size_t k = 0; k < n; ++k)
    if (!matched[k]) unmatched.push_back(players[k]);
  if (unmatched.empty() != rest.empty()) throw InvariantViolation("symprop: leftover cake without leftover players");
  round.unmatched = unmatched;
  round.leftover = rest;

  std::vector<std::pair<std::vector<std::size_t>, Subcake>> calls;
  for (const auto& g : groups) {
    std::vector<std::size_t> members, group_pieces;
    Subcake share;
    for (std::size_t k : g) {
      members.push_back(players[k]);
      group_pieces.push_back(piece_of[k]);
      share = share.unite(parts[piece_of[k]]);
    }
    std::sort(group_pieces.begin(), group_pieces.end());
    round.groups.push_back(members);
    round.group_pieces.push_back(group_pieces);
    calls.emplace_back(std::move(members), std::move(share));
  }
  ctx.log_round(std::move(round));

  for (const auto& [members, share] : calls) sym_step(ctx, members, share, pieces, depth + 1);
  sym_step(ctx, unmatched, rest, pieces, depth + 1);
}

}  // namespace detail

// Symmetric proportional division: each player's value does not depend on
// their position in the input list, and is at least μ_i(X)/n.
inline Division sym_prop(std::span<const Valuation> vs, const Subcake& X = Subcake::unit(),
                         AllocationLimits limits = {}) {
  if (vs.empty()) throw DomainError("symprop needs at least one player");
  if (X.empty()) throw DomainError("symprop needs a nonempty cake");
  RunContext ctx(vs, limits);
  auto players = detail::identity_order(vs.size());
  if (!(X == Subcake::unit())) detail::prime_subcake(ctx, players, X);
  std::vector<Subcake> pieces(vs.size());
  detail::sym_step(ctx, players, X, pieces, 0);
  return ctx.finish("symprop", X, std::move(pieces));
}

inline Division sym_prop(RunContext& ctx) {
  if (ctx.size() == 0) throw DomainError("symprop needs at least one player");
  std::vector<Subcake> pieces(ctx.size());
  detail::sym_step(ctx, detail::identity_order(ctx.size()), Subcake::unit(), pieces, 0);
  return ctx.finish("symprop", Subcake::unit(), std::move(pieces));
}

}  // namespace cake
