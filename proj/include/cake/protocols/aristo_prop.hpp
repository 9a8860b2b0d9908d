#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "cake/division.hpp"
#include "cake/protocols/common.hpp"

namespace cake {

namespace detail {

// Makes the interval and gap measures of X known for every player, paying
// one eval for each that is not already derivable.
inline void prime_subcake(RunContext& ctx, std::span<const std::size_t> players, const Subcake& X) {
  const auto& parts = X.intervals();
  for (std::size_t p : players)
    for (std::size_t k = 0; k < parts.size(); ++k) {
      ctx.value(p, parts[k].lo, parts[k].hi);
      if (k + 1 < parts.size()) ctx.value(p, parts[k].hi, parts[k + 1].lo);
    }
}

inline void aristo_step(RunContext& ctx, const std::vector<std::size_t>& players, const Subcake& X,
                        std::vector<Subcake>& pieces, std::size_t depth) {
  const std::size_t n = players.size();
  if (n == 0) return;
  if (n == 1) {
    pieces[players.front()] = X;
    return;
  }
  // The first player cuts n pieces of equal value; everyone evaluates them.
  CutVector x = equal_cut(ctx, players.front(), X, n);
  std::vector<Subcake> parts = pieces_from_boundaries(X, x);
  auto values = evaluation_grid(ctx, players, X, x);
  AcceptabilityMatrix m = build_acceptability(values, known_totals(ctx, players, X), n);
  Allocation chosen = find_maximal_allocation(m, ctx.limits());
  if (chosen.size() == 0) throw InvariantViolation("aristoprop: empty maximal allocation");

  // Matched players who value every allocated piece exactly like the
  // cutter values A_1 are served now; the others keep their piece for a
  // recursive call shared with players of identical evaluations.
  const Rational& reference = values[0][0];
  std::vector<bool> matched(n, false);
  std::vector<std::size_t> deferred;
  std::vector<std::size_t> piece_of(n, 0);
  RoundState round;
  Subcake rest = X;
  for (const auto& pair : chosen.pairs) {
    matched[pair.player] = true;
    piece_of[pair.player] = pair.piece;
    rest = rest.minus(parts[pair.piece]);
    bool same = std::all_of(chosen.pairs.begin(), chosen.pairs.end(),
                            [&](const Assignment& other) { return values[pair.player][other.piece] == reference; });
    if (same) {
      pieces[players[pair.player]] = parts[pair.piece];
      round.served.push_back(players[pair.player]);
    } else {
      deferred.push_back(pair.player);
    }
  }
  std::sort(deferred.begin(), deferred.end());
  std::sort(round.served.begin(), round.served.end());
  auto groups = group_by_evaluation_vector(deferred, values);

  std::vector<std::size_t> unmatched;
  for (std::size_t k = 0; k < n; ++k)
    if (!matched[k]) unmatched.push_back(players[k]);
  if (unmatched.empty() != rest.empty()) throw InvariantViolation("aristoprop: leftover cake without leftover players");

  round.depth = depth;
  round.players = players;
  round.cake = X;
  round.boundaries = x;
  round.values = values;
  round.chosen = chosen;
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
    round.groups.push_back(members);
    round.group_pieces.push_back(group_pieces);
    calls.emplace_back(std::move(members), std::move(share));
  }
  ctx.log_round(std::move(round));

  for (const auto& [members, share] : calls) aristo_step(ctx, members, share, pieces, depth + 1);
  aristo_step(ctx, unmatched, rest, pieces, depth + 1);
}

}  // namespace detail

// Aristotelian proportional division: players with identical measures get
// identical values, every player gets at least μ_i(X)/n. For X other than
// the unit cake the measures of X's intervals and gaps are first learned
// with counted evals.
inline Division aristo_prop(std::span<const Valuation> vs, const Subcake& X = Subcake::unit(),
                            AllocationLimits limits = {}) {
  if (vs.empty()) throw DomainError("aristoprop needs at least one player");
  if (X.empty()) throw DomainError("aristoprop needs a nonempty cake");
  RunContext ctx(vs, limits);
  auto players = detail::identity_order(vs.size());
  if (!(X == Subcake::unit())) detail::prime_subcake(ctx, players, X);
  std::vector<Subcake> pieces(vs.size());
  detail::aristo_step(ctx, players, X, pieces, 0);
  return ctx.finish("aristoprop", X, std::move(pieces));
}

// Same, running inside a caller-owned context (exposes the cache and rounds).
inline Division aristo_prop(RunContext& ctx) {
  if (ctx.size() == 0) throw DomainError("aristoprop needs at least one player");
  std::vector<Subcake> pieces(ctx.size());
  detail::aristo_step(ctx, detail::identity_order(ctx.size()), Subcake::unit(), pieces, 0);
  return ctx.finish("aristoprop", Subcake::unit(), std::move(pieces));
}

}  // namespace cake
