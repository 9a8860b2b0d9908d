#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/rational.hpp"

namespace cake {

// accepts[i][j] <=> values[i][j] >= thresholds[i], where the threshold is
// the player's value of the whole current subcake divided by n.
struct AcceptabilityMatrix {
  std::size_t n_players = 0;
  std::size_t n_pieces = 0;
  std::vector<std::vector<bool>> accepts;
  std::vector<std::vector<Rational>> values;
  std::vector<Rational> thresholds;

  bool operator()(std::size_t player, std::size_t piece) const { return accepts[player][piece]; }

  // Matrix with no value information, for purely combinatorial use.
  static AcceptabilityMatrix from_booleans(std::vector<std::vector<bool>> grid) {
    AcceptabilityMatrix m;
    m.n_players = grid.size();
    m.n_pieces = grid.empty() ? 0 : grid.front().size();
    for (const auto& row : grid)
      if (row.size() != m.n_pieces) throw DomainError("ragged acceptability grid");
    m.accepts = std::move(grid);
    return m;
  }
};

inline AcceptabilityMatrix build_acceptability(std::vector<std::vector<Rational>> values,
                                               const std::vector<Rational>& totals, std::size_t n) {
  if (values.size() != totals.size()) throw DomainError("one total per player required");
  if (n == 0) throw DomainError("n must be positive");
  AcceptabilityMatrix m;
  m.n_players = values.size();
  m.n_pieces = values.empty() ? 0 : values.front().size();
  m.accepts.assign(m.n_players, std::vector<bool>(m.n_pieces, false));
  for (std::size_t i = 0; i < m.n_players; ++i) {
    if (values[i].size() != m.n_pieces) throw DomainError("ragged value grid");
    m.thresholds.push_back(totals[i] / Rational(static_cast<long>(n)));
    Rational row_sum = 0;
    bool any = false;
    for (std::size_t j = 0; j < m.n_pieces; ++j) {
      m.accepts[i][j] = values[i][j] >= m.thresholds[i];
      any = any || m.accepts[i][j];
      row_sum += values[i][j];
    }
    // n pieces tiling the subcake: some piece is worth at least the average.
    if (m.n_pieces == n && row_sum == totals[i] && !any)
      throw InvariantViolation("player " + std::to_string(i) + " accepts no piece of a partition");
  }
  m.values = std::move(values);
  return m;
}

struct Assignment {
  std::size_t player;
  std::size_t piece;

  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    if (auto c = a.piece <=> b.piece; c != 0) return c;
    return a.player <=> b.player;
  }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Player <-> piece matching, pairs sorted by piece index. The canonical
// order on allocations is lexicographic on this sorted pair list.
struct Allocation {
  std::vector<Assignment> pairs;

  std::size_t size() const { return pairs.size(); }

  std::uint64_t piece_mask() const {
    std::uint64_t m = 0;
    for (const auto& a : pairs) m |= std::uint64_t{1} << a.piece;
    return m;
  }

  friend auto operator<=>(const Allocation& a, const Allocation& b) {
    return std::lexicographical_compare_three_way(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end());
  }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// All maximal allocations of one matrix, in canonical order.
struct AllocationSet {
  std::vector<Allocation> allocations;
  std::size_t cardinality = 0;

  std::size_t size() const { return allocations.size(); }

  // Number of distinct sets of matched pieces.
  std::size_t distinct_piece_subsets() const {
    std::set<std::uint64_t> masks;
    for (const auto& a : allocations) masks.insert(a.piece_mask());
    return masks.size();
  }
};

struct AllocationLimits {
  std::size_t max_pieces = 12;
  std::size_t max_allocations = std::size_t{1} << 22;
};

// Matched players accept their piece; every unmatched player strictly
// rejects every matched piece. Non-injective pair sets are not allocations.
inline bool is_allocation(const AcceptabilityMatrix& m, const std::vector<Assignment>& pairs) {
  std::vector<bool> player_used(m.n_players, false), piece_used(m.n_pieces, false);
  for (const auto& a : pairs) {
    if (a.player >= m.n_players || a.piece >= m.n_pieces) return false;
    if (player_used[a.player] || piece_used[a.piece]) return false;
    player_used[a.player] = piece_used[a.piece] = true;
    if (!m(a.player, a.piece)) return false;
  }
  for (std::size_t i = 0; i < m.n_players; ++i) {
    if (player_used[i]) continue;
    for (const auto& a : pairs)
      if (m(i, a.piece)) return false;
  }
  return true;
}

namespace detail {

// Bitset view of the matrix: acceptors[j] = players accepting piece j.
struct BipartiteMasks {
  std::vector<std::uint64_t> acceptors;
  std::vector<std::uint64_t> accepted;  // accepted[i] = pieces player i accepts

  explicit BipartiteMasks(const AcceptabilityMatrix& m)
      : acceptors(m.n_pieces, 0), accepted(m.n_players, 0) {
    for (std::size_t i = 0; i < m.n_players; ++i)
      for (std::size_t j = 0; j < m.n_pieces; ++j)
        if (m(i, j)) {
          acceptors[j] |= std::uint64_t{1} << i;
          accepted[i] |= std::uint64_t{1} << j;
        }
  }

  std::uint64_t neighbours(std::uint64_t pieces) const {
    std::uint64_t out = 0;
    for (std::uint64_t p = pieces; p; p &= p - 1) out |= acceptors[std::countr_zero(p)];
    return out;
  }

  // Whether every piece in `pieces` can be matched to a distinct player in
  // `players` (augmenting paths).
  bool saturates(std::uint64_t pieces, std::uint64_t players) const {
    std::vector<int> owner_of_player(64, -1);
    for (std::uint64_t p = pieces; p; p &= p - 1) {
      std::uint64_t seen = 0;
      if (!augment(std::countr_zero(p), players, seen, owner_of_player)) return false;
    }
    return true;
  }

 private:
  bool augment(int piece, std::uint64_t players, std::uint64_t& seen, std::vector<int>& owner) const {
    for (std::uint64_t c = acceptors[piece] & players & ~seen; c; c &= c - 1) {
      int player = std::countr_zero(c);
      seen |= std::uint64_t{1} << player;
      if (owner[player] < 0 || augment(owner[player], players, seen, owner)) {
        owner[player] = piece;
        return true;
      }
    }
    return false;
  }
};

inline void check_limits(const AcceptabilityMatrix& m, const AllocationLimits& limits) {
  if (m.n_pieces > limits.max_pieces || m.n_players > 64)
    throw ResourceError("allocation search over " + std::to_string(m.n_players) + " players and " +
                        std::to_string(m.n_pieces) + " pieces exceeds the cap of " +
                        std::to_string(limits.max_pieces) + " pieces");
}

// Piece subsets P whose acceptors N(P) can be matched onto P one-to-one
// with |N(P)| = |P|. These are exactly the matched-piece sets of
// allocations. Returns the masks of maximum size.
inline std::vector<std::uint64_t> maximal_piece_sets(const BipartiteMasks& g, std::size_t n_pieces) {
  std::vector<std::uint64_t> best;
  int best_size = -1;
  const std::uint64_t end = std::uint64_t{1} << n_pieces;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    int k = std::popcount(mask);
    if (k < best_size) continue;
    std::uint64_t players = g.neighbours(mask);
    if (std::popcount(players) != k || !g.saturates(mask, players)) continue;
    if (k > best_size) {
      best_size = k;
      best.clear();
    }
    best.push_back(mask);
  }
  return best;
}

// Every perfect matching between `pieces` and `players`, pieces in
// ascending order, players tried in ascending order.
inline void perfect_matchings(const BipartiteMasks& g, std::uint64_t pieces, std::uint64_t players,
                              std::vector<Assignment>& prefix, std::vector<Allocation>& out,
                              std::size_t cap) {
  if (pieces == 0) {
    if (out.size() >= cap)
      throw ResourceError("more than " + std::to_string(cap) + " maximal allocations");
    out.push_back(Allocation{prefix});
    return;
  }
  int piece = std::countr_zero(pieces);
  std::uint64_t rest = pieces & (pieces - 1);
  for (std::uint64_t c = g.acceptors[piece] & players; c; c &= c - 1) {
    int player = std::countr_zero(c);
    std::uint64_t left = players & ~(std::uint64_t{1} << player);
    if (!g.saturates(rest, left)) continue;
    prefix.push_back({static_cast<std::size_t>(player), static_cast<std::size_t>(piece)});
    perfect_matchings(g, rest, left, prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace detail

// Every allocation of maximum cardinality, deduplicated, in canonical
// order. If no nonempty allocation exists the result is {∅}.
inline AllocationSet enumerate_maximal_allocations(const AcceptabilityMatrix& m, const AllocationLimits& limits = {}) {
  detail::check_limits(m, limits);
  detail::BipartiteMasks g(m);
  AllocationSet result;
  for (std::uint64_t mask : detail::maximal_piece_sets(g, m.n_pieces)) {
    std::vector<Assignment> prefix;
    detail::perfect_matchings(g, mask, g.neighbours(mask), prefix, result.allocations, limits.max_allocations);
  }
  if (result.allocations.empty()) throw InvariantViolation("no maximal allocation found");
  std::sort(result.allocations.begin(), result.allocations.end());
  result.cardinality = result.allocations.front().size();
  return result;
}

// The canonically first maximal allocation, found without listing them all.
inline Allocation find_maximal_allocation(const AcceptabilityMatrix& m, const AllocationLimits& limits = {}) {
  detail::check_limits(m, limits);
  detail::BipartiteMasks g(m);
  std::optional<Allocation> best;
  for (std::uint64_t mask : detail::maximal_piece_sets(g, m.n_pieces)) {
    // Lexicographically least perfect matching on this piece set: each piece
    // in turn takes the smallest player that keeps the rest matchable.
    Allocation a;
    std::uint64_t players = g.neighbours(mask);
    for (std::uint64_t p = mask; p; p &= p - 1) {
      int piece = std::countr_zero(p);
      std::uint64_t rest = p & (p - 1);
      for (std::uint64_t c = g.acceptors[piece] & players; c; c &= c - 1) {
        int player = std::countr_zero(c);
        std::uint64_t left = players & ~(std::uint64_t{1} << player);
        if (g.saturates(rest, left)) {
          a.pairs.push_back({static_cast<std::size_t>(player), static_cast<std::size_t>(piece)});
          players = left;
          break;
        }
      }
    }
    if (!best || a < *best) best = std::move(a);
  }
  if (!best) throw InvariantViolation("no maximal allocation found");
  return *best;
}

}  // namespace cake
