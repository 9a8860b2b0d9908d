#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cake/division.hpp"
#include "cake/protocols/common.hpp"

namespace cake {

// Player 1 halves the cake by their measure; player 2 takes the half they
// weakly prefer, the left one on a tie.
inline Division cut_and_choose(std::span<const Valuation> vs) {
  if (vs.size() != 2) throw CapabilityError("cut-and-choose needs exactly 2 players, got " + std::to_string(vs.size()));
  RunContext ctx(vs);
  Rational mid = ctx.cut(0, 0, make_rational(1, 2));
  Rational left = ctx.value(1, 0, mid);
  Rational right = ctx.value(1, mid, 1);
  Subcake l = Subcake::between(0, mid), r = Subcake::between(mid, 1);
  if (left >= right) return ctx.finish("cut-and-choose", Subcake::unit(), {r, l});
  return ctx.finish("cut-and-choose", Subcake::unit(), {l, r});
}

// Banach-Knaster. Each round every remaining player marks the point where
// the piece from the current left end reaches 1/n for them; the smallest
// mark wins the piece, ties going to the earliest input position.
inline Division last_diminisher(std::span<const Valuation> vs) {
  const std::size_t n = vs.size();
  if (n == 0) throw DomainError("last-diminisher needs at least one player");
  RunContext ctx(vs);
  const Rational share = Rational(1) / Rational(static_cast<long>(n));
  std::vector<Subcake> pieces(n);
  std::vector<std::size_t> remaining = detail::identity_order(n);
  Rational left = 0;
  while (remaining.size() > 1) {
    std::optional<std::size_t> winner;
    Rational best;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      Rational mark = ctx.cut(remaining[k], left, share);
      if (!winner || mark < best) {
        winner = k;
        best = mark;
      }
    }
    pieces[remaining[*winner]] = Subcake::between(left, best);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*winner));
    left = best;
  }
  pieces[remaining.front()] = Subcake::between(left, 1);
  return ctx.finish("last-diminisher", Subcake::unit(), std::move(pieces));
}

namespace detail {

inline void even_paz_step(RunContext& ctx, std::vector<std::size_t> players, const Rational& lo, const Rational& hi,
                          std::vector<Subcake>& pieces) {
  const std::size_t n = players.size();
  if (n == 1) {
    pieces[players.front()] = Subcake::between(lo, hi);
    return;
  }
  const std::size_t half = n / 2;
  const Rational fraction = make_rational(static_cast<long>(half), static_cast<long>(n));
  std::vector<Rational> marks;
  for (std::size_t p : players) marks.push_back(ctx.cut(p, lo, ctx.value(p, lo, hi) * fraction));
  std::vector<std::size_t> order = identity_order(n);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return marks[a] < marks[b]; });
  const Rational split = marks[order[half - 1]];
  std::vector<std::size_t> left, right;
  for (std::size_t k = 0; k < n; ++k) (k < half ? left : right).push_back(players[order[k]]);
  even_paz_step(ctx, std::move(left), lo, split, pieces);
  even_paz_step(ctx, std::move(right), split, hi, pieces);
}

}  // namespace detail

// Divide and conquer: everyone marks the point leaving floor(n/2)/n of
// their value of the current interval on the left; the floor(n/2) smallest
// marks (ties by input order) recurse left of the floor(n/2)-th mark.
inline Division even_paz(std::span<const Valuation> vs) {
  if (vs.empty()) throw DomainError("even-paz needs at least one player");
  RunContext ctx(vs);
  std::vector<Subcake> pieces(vs.size());
  detail::even_paz_step(ctx, detail::identity_order(vs.size()), 0, 1, pieces);
  return ctx.finish("even-paz", Subcake::unit(), std::move(pieces));
}

namespace detail {

// Index of the largest value, earliest on ties, among the allowed indices.
inline std::size_t favourite(const std::vector<Rational>& values, const std::vector<bool>& allowed) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (allowed[k] && (!best || values[k] > values[*best])) best = k;
  return *best;
}

}  // namespace detail

// Selfridge-Conway envy-free division for three players.
inline Division selfridge_conway(std::span<const Valuation> vs) {
  if (vs.size() != 3) throw CapabilityError("selfridge-conway needs exactly 3 players, got " + std::to_string(vs.size()));
  RunContext ctx(vs);
  const Rational third = make_rational(1, 3);

  // Stage 1: P1 cuts three equal pieces, P2 trims their largest to tie the
  // second largest, then P3, P2, P1 choose.
  Rational a = ctx.cut(0, 0, third);
  Rational b = ctx.cut(0, a, third);
  std::vector<Interval> main{Interval(0, a), Interval(a, b), Interval(b, 1)};
  std::vector<Rational> p2;
  for (const auto& iv : main) p2.push_back(ctx.value(1, iv.lo, iv.hi));
  std::vector<bool> all(3, true);
  std::size_t largest = detail::favourite(p2, all);
  std::vector<bool> others = all;
  others[largest] = false;
  std::size_t second = detail::favourite(p2, others);

  std::optional<std::size_t> trimmed;
  std::optional<Interval> residue;
  if (p2[largest] > p2[second]) {
    Rational c = ctx.cut(1, main[largest].lo, p2[largest] - p2[second]);
    residue = Interval(main[largest].lo, c);
    main[largest] = Interval(c, main[largest].hi);
    trimmed = largest;
  }

  std::vector<Subcake> pieces(3);
  std::vector<bool> open(3, true);
  std::vector<Rational> p3;
  for (const auto& iv : main) p3.push_back(ctx.value(2, iv.lo, iv.hi));
  std::size_t pick3 = detail::favourite(p3, open);
  open[pick3] = false;
  std::size_t pick2;
  if (trimmed && open[*trimmed]) {
    pick2 = *trimmed;
  } else {
    std::vector<Rational> p2now;
    for (const auto& iv : main) p2now.push_back(ctx.value(1, iv.lo, iv.hi));
    pick2 = detail::favourite(p2now, open);
  }
  open[pick2] = false;
  std::size_t pick1 = detail::favourite(std::vector<Rational>(3, Rational(0)), open);
  pieces[2] = Subcake{main[pick3]};
  pieces[1] = Subcake{main[pick2]};
  pieces[0] = Subcake{main[pick1]};

  // Stage 2: the player without the trimmed piece cuts the trimming into
  // three equal parts; the trimmed piece's holder chooses, then P1.
  if (residue) {
    std::size_t holder = pick3 == *trimmed ? 2 : 1;
    std::size_t cutter = holder == 2 ? 1 : 2;
    Rational r = ctx.value(cutter, residue->lo, residue->hi);
    Rational r1 = ctx.cut(cutter, residue->lo, r / 3);
    Rational r2 = ctx.cut(cutter, r1, r / 3);
    std::vector<Interval> parts{Interval(residue->lo, r1), Interval(r1, r2), Interval(r2, residue->hi)};
    std::vector<bool> left(3, true);
    std::vector<Rational> hv;
    for (const auto& iv : parts) hv.push_back(ctx.value(holder, iv.lo, iv.hi));
    std::size_t ph = detail::favourite(hv, left);
    left[ph] = false;
    std::vector<Rational> v1(3, Rational(0));
    for (std::size_t k = 0; k < 3; ++k)
      if (left[k]) v1[k] = ctx.value(0, parts[k].lo, parts[k].hi);
    std::size_t p1 = detail::favourite(v1, left);
    left[p1] = false;
    std::size_t pc = detail::favourite(std::vector<Rational>(3, Rational(0)), left);
    pieces[holder] = pieces[holder].unite(Subcake{parts[ph]});
    pieces[0] = pieces[0].unite(Subcake{parts[p1]});
    pieces[cutter] = pieces[cutter].unite(Subcake{parts[pc]});
  }
  return ctx.finish("selfridge-conway", Subcake::unit(), std::move(pieces));
}

namespace detail {

inline void kuhn_step(RunContext& ctx, const std::vector<std::size_t>& players, const Subcake& X,
                      std::vector<Subcake>& pieces, std::size_t depth) {
  const std::size_t n = players.size();
  if (n == 0) return;
  if (n == 1) {
    pieces[players.front()] = X;
    return;
  }
  CutVector x = equal_cut(ctx, players.front(), X, n);
  std::vector<Subcake> parts = pieces_from_boundaries(X, x);
  auto values = evaluation_grid(ctx, players, X, x);
  AcceptabilityMatrix m = build_acceptability(values, known_totals(ctx, players, X), n);
  Allocation chosen = find_maximal_allocation(m, ctx.limits());
  if (chosen.size() == 0) throw InvariantViolation("kuhn: empty maximal allocation");

  RoundState round;
  round.depth = depth;
  round.players = players;
  round.cake = X;
  round.boundaries = x;
  round.values = values;
  round.chosen = chosen;

  std::vector<bool> matched(n, false);
  Subcake rest = X;
  for (const auto& pair : chosen.pairs) {
    pieces[players[pair.player]] = parts[pair.piece];
    matched[pair.player] = true;
    round.served.push_back(players[pair.player]);
    rest = rest.minus(parts[pair.piece]);
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t k = 0; k < n; ++k)
    if (!matched[k]) unmatched.push_back(players[k]);
  round.unmatched = unmatched;
  round.leftover = rest;
  ctx.log_round(std::move(round));
  if (unmatched.empty() != rest.empty()) throw InvariantViolation("kuhn: leftover cake without leftover players");
  kuhn_step(ctx, unmatched, rest, pieces, depth + 1);
}

}  // namespace detail

// Kuhn's procedure: the first player cuts n equal pieces, a maximal
// allocation is served, the rest recurse on the unallocated cake.
inline Division kuhn(std::span<const Valuation> vs) {
  if (vs.empty()) throw DomainError("kuhn needs at least one player");
  RunContext ctx(vs);
  std::vector<Subcake> pieces(vs.size());
  detail::kuhn_step(ctx, detail::identity_order(vs.size()), Subcake::unit(), pieces, 0);
  return ctx.finish("kuhn", Subcake::unit(), std::move(pieces));
}

}  // namespace cake
