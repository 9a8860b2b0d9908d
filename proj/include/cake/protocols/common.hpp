#pragma once

#include <span>
#include <vector>

#include "cake/division.hpp"

namespace cake {

// Splits `members` (indices into `rows`) into classes of exactly equal
// evaluation rows. Classes are ordered by their first member in `members`.
inline std::vector<std::vector<std::size_t>> group_by_evaluation_vector(
    std::span<const std::size_t> members, const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k : members) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const std::vector<std::size_t>& g) { return rows[g.front()] == rows[k]; });
    if (it == groups.end()) groups.push_back({k});
    else it->push_back(k);
  }
  return groups;
}

namespace detail {

// The player's n-way equal cut of X: x_0 = min X, x_j = cut^X(x_{j-1}, μ(X)/n)
// for j < n, and x_n = sup X so that the last piece runs to the end of X
// (a leftmost last cut could stop short of it when the density vanishes).
inline CutVector equal_cut(RunContext& ctx, std::size_t player, const Subcake& X, std::size_t n) {
  Rational share = ctx.known_measure(player, X) / Rational(static_cast<long>(n));
  CutVector x{X.min()};
  for (std::size_t j = 1; j < n; ++j) x.push_back(ctx.cut_in(player, X, x.back(), share));
  x.push_back(X.sup());
  return x;
}

inline std::vector<Subcake> pieces_from_boundaries(const Subcake& X, const CutVector& x) {
  std::vector<Subcake> pieces;
  for (std::size_t j = 1; j < x.size(); ++j) pieces.push_back(X.clip(x[j - 1], x[j]));
  return pieces;
}

// values[k][j] = μ_{players[k]}(A_j) through subcake evals (cached where known).
inline std::vector<std::vector<Rational>> evaluation_grid(RunContext& ctx, std::span<const std::size_t> players,
                                                          const Subcake& X, const CutVector& x) {
  std::vector<std::vector<Rational>> values(players.size());
  for (std::size_t k = 0; k < players.size(); ++k)
    for (std::size_t j = 1; j < x.size(); ++j) values[k].push_back(ctx.eval_in(players[k], X, x[j - 1], x[j]));
  return values;
}

inline std::vector<Rational> known_totals(const RunContext& ctx, std::span<const std::size_t> players,
                                          const Subcake& X) {
  std::vector<Rational> totals;
  for (std::size_t p : players) totals.push_back(ctx.known_measure(p, X));
  return totals;
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace detail
}  // namespace cake
