#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cake/allocation.hpp"
#include "cake/error.hpp"
#include "cake/partition_orders.hpp"
#include "cake/query.hpp"
#include "cake/subcake.hpp"
#include "cake/valuation.hpp"

namespace cake {

// Output of one protocol run. pieces[i] and values[i] belong to the player
// at input position i; values are ground truth, never queried.
struct Division {
  std::string algorithm;
  Subcake ambient;
  std::vector<Subcake> pieces;
  std::vector<Rational> values;
  QueryLedger ledger;

  std::size_t size() const { return pieces.size(); }

  Partition partition() const { return Partition{ambient, pieces}; }
};

// Bookkeeping of one recursive call of a Kuhn-style protocol. Player
// fields hold input positions; piece fields hold 0-based indices into the
// call's pieces A_1..A_η.
struct RoundState {
  std::size_t depth = 0;
  std::vector<std::size_t> players;
  Subcake cake;
  CutVector boundaries;                 // x_0 .. x_η of the chosen cutter
  std::vector<CutVector> player_cuts;   // every player's cut vector (symmetric protocol only)
  std::vector<std::vector<Rational>> values;  // values[k][j] = μ_{players[k]}(A_j)
  Allocation chosen;                    // pairs use positions into `players`
  std::vector<std::size_t> served;      // E: players served in this call
  std::vector<std::vector<std::size_t>> groups;       // E_{1,m}
  std::vector<std::vector<std::size_t>> group_pieces; // L_{1,m}
  std::vector<std::size_t> unmatched;   // E_2
  Subcake leftover;                     // X_2
  std::size_t allocation_count = 0;     // |S|
  std::size_t piece_subset_count = 0;   // distinct matched-piece sets in S
  std::uint64_t min_weight = 0;         // min N_A
  std::vector<std::size_t> support;     // J
  // Matched players for which "cut vector equals the chosen vector" and
  // "values every piece at exactly 1/η of the subcake" disagree.
  std::vector<std::size_t> reading_disagreements;
};

// Oracle state confined to one protocol run: the ledger, the mediator's
// knowledge cache and a log of recursive rounds.
class RunContext {
 public:
  explicit RunContext(std::span<const Valuation> valuations, AllocationLimits limits = {})
      : valuations_(valuations), limits_(limits) {
    for (std::size_t i = 0; i < valuations_.size(); ++i) cache_.record(i, Rational(0), Rational(1), Rational(1));
  }

  std::size_t size() const { return valuations_.size(); }
  const Valuation& valuation(std::size_t player) const { return valuations_[player]; }
  std::span<const Valuation> valuations() const { return valuations_; }
  const AllocationLimits& limits() const { return limits_; }

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }
  GapCache& cache() { return cache_; }
  const GapCache& cache() const { return cache_; }

  // μ([a, b]) from the cache, or one primitive eval.
  Rational value(std::size_t player, const Rational& a, const Rational& b) {
    return detail::cached_or_eval(valuations_[player], a, b, cache_, ledger_, player);
  }

  // Primitive cut, remembered by the cache.
  Rational cut(std::size_t player, const Rational& x, const Rational& a) {
    Rational y = measure_cut(valuations_[player], x, a, ledger_, player);
    cache_.record(player, x, y, a);
    return y;
  }

  Rational eval_in(std::size_t player, const Subcake& X, const Rational& x, const Rational& y) {
    return subcake_eval(valuations_[player], X, x, y, cache_, ledger_, player);
  }

  Rational cut_in(std::size_t player, const Subcake& X, const Rational& x, const Rational& a) {
    return subcake_cut(valuations_[player], X, x, a, cache_, ledger_, player);
  }

  // μ(X) assembled from cached interval measures only; the protocols rely
  // on it being known before they ask for cuts of value μ(X)/n.
  Rational known_measure(std::size_t player, const Subcake& X) const {
    Rational total = 0;
    for (const auto& p : X.intervals()) total += detail::required(cache_, player, p.lo, p.hi, "interval");
    return total;
  }

  void log_round(RoundState r) { rounds_.push_back(std::move(r)); }
  const std::vector<RoundState>& rounds() const { return rounds_; }

  // Checks that the pieces tile the ambient subcake and attaches ground-truth
  // values. Pieces are indexed by input position.
  Division finish(std::string algorithm, Subcake ambient, std::vector<Subcake> pieces) const {
    if (pieces.size() != valuations_.size()) throw InvariantViolation("one piece per player required");
    Subcake covered;
    Rational total_length = 0;
    for (const auto& p : pieces) {
      covered = covered.unite(p);
      total_length += p.length();
    }
    if (!(covered == ambient) || total_length != ambient.length())
      throw InvariantViolation(algorithm + ": pieces do not tile the cake exactly");
    Division d;
    d.algorithm = std::move(algorithm);
    d.ambient = std::move(ambient);
    for (std::size_t i = 0; i < pieces.size(); ++i) d.values.push_back(oracle_direct_measure(valuations_[i], pieces[i]));
    d.pieces = std::move(pieces);
    d.ledger = ledger_;
    return d;
  }

 private:
  std::span<const Valuation> valuations_;
  AllocationLimits limits_;
  QueryLedger ledger_;
  GapCache cache_;
  std::vector<RoundState> rounds_;
};

}  // namespace cake
