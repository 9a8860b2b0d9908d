#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/rational.hpp"
#include "cake/subcake.hpp"
#include "cake/valuation.hpp"

namespace cake {

enum class QueryKind { eval, cut };

inline const char* to_string(QueryKind k) { return k == QueryKind::eval ? "eval" : "cut"; }

// One primitive query on the full cake. For eval, (first, second) = (x, y)
// and answer = μ([x, y]); for cut, (first, second) = (x, a) and answer = y.
struct QueryRecord {
  QueryKind kind;
  std::size_t player;
  Rational first;
  Rational second;
  Rational answer;
};

// Counts primitive Robertson-Webb queries. Subcake queries never appear
// here directly, only the primitives they decompose into.
class QueryLedger {
 public:
  void record(QueryKind kind, std::size_t player, Rational first, Rational second, Rational answer) {
    (kind == QueryKind::eval ? eval_count_ : cut_count_) += 1;
    trace_.push_back({kind, player, std::move(first), std::move(second), std::move(answer)});
  }

  // Appends another run's queries, renaming its players through player_map.
  void absorb(const QueryLedger& other, const std::vector<std::size_t>& player_map) {
    for (const auto& q : other.trace_) record(q.kind, player_map.at(q.player), q.first, q.second, q.answer);
  }

  std::size_t eval_count() const { return eval_count_; }
  std::size_t cut_count() const { return cut_count_; }
  std::size_t total() const { return eval_count_ + cut_count_; }
  const std::vector<QueryRecord>& trace() const { return trace_; }

 private:
  std::size_t eval_count_ = 0;
  std::size_t cut_count_ = 0;
  std::vector<QueryRecord> trace_;
};

// Measures a mediator already knows, per player. Every learned fact is a
// difference F(b) - F(a) of the player's cumulative distribution, so the
// facts form a graph on cut points and μ([a, b]) is derivable exactly when
// a and b are connected. Stored as a weighted union-find whose potentials
// are CDF offsets to the component root.
class GapCache {
 public:
  struct Fact {
    Rational lo;
    Rational hi;
    Rational value;
  };

  // Records μ_player([lo, hi]) = value. A fact contradicting earlier
  // knowledge throws InvariantViolation.
  void record(std::size_t player, const Rational& lo, const Rational& hi, const Rational& value) {
    Table& t = table(player);
    std::size_t a = t.node(lo);
    std::size_t b = t.node(hi);
    auto [ra, pa] = t.find(a);
    auto [rb, pb] = t.find(b);
    if (ra == rb) {
      if (pb - pa != value)
        throw InvariantViolation("cache contradiction for player " + std::to_string(player) + " on [" +
                                 format_rational(lo) + ", " + format_rational(hi) + "]");
      return;
    }
    t.parent[rb] = ra;
    t.offset[rb] = value - pb + pa;
    t.facts.push_back({lo, hi, value});
  }

  // μ_player([lo, hi]) if derivable from recorded facts.
  std::optional<Rational> lookup(std::size_t player, const Rational& lo, const Rational& hi) const {
    if (lo == hi) return Rational(0);
    if (player >= tables_.size()) return std::nullopt;
    Table& t = tables_[player];
    auto ia = t.index.find(lo);
    auto ib = t.index.find(hi);
    if (ia == t.index.end() || ib == t.index.end()) return std::nullopt;
    auto [ra, pa] = t.find(ia->second);
    auto [rb, pb] = t.find(ib->second);
    if (ra != rb) return std::nullopt;
    return Rational(pb - pa);
  }

  // Facts that extended the knowledge graph (redundant ones are not kept).
  const std::vector<Fact>& facts(std::size_t player) const {
    static const std::vector<Fact> none;
    return player < tables_.size() ? tables_[player].facts : none;
  }

  // All points the mediator has located for this player.
  std::vector<Rational> points(std::size_t player) const {
    std::vector<Rational> out;
    if (player < tables_.size())
      for (const auto& [p, _] : tables_[player].index) out.push_back(p);
    return out;
  }

 private:
  struct Table {
    std::map<Rational, std::size_t> index;
    std::vector<std::size_t> parent;
    std::vector<Rational> offset;  // F(node) - F(parent[node])
    std::vector<Fact> facts;

    std::size_t node(const Rational& p) {
      auto [it, inserted] = index.try_emplace(p, parent.size());
      if (inserted) {
        parent.push_back(parent.size());
        offset.emplace_back(0);
      }
      return it->second;
    }

    // Root of n and F(n) - F(root), compressing the path on the way.
    std::pair<std::size_t, Rational> find(std::size_t n) {
      if (parent[n] == n) return {n, Rational(0)};
      auto [root, up] = find(parent[n]);
      offset[n] += up;
      parent[n] = root;
      return {root, offset[n]};
    }
  };

  Table& table(std::size_t player) {
    if (player >= tables_.size()) tables_.resize(player + 1);
    return tables_[player];
  }

  mutable std::vector<Table> tables_;
};

// Ground truth μ(X) by direct integration. Bypasses every ledger.
inline Rational oracle_direct_measure(const Valuation& v, const Subcake& x) { return v.measure(x); }

// eval_i(a, b): one counted primitive query.
inline Rational measure_eval(const Valuation& v, const Rational& a, const Rational& b, QueryLedger& ledger,
                             std::size_t player = 0) {
  if (a < 0 || b > 1 || a > b)
    throw DomainError("eval bounds [" + format_rational(a) + ", " + format_rational(b) + "] outside 0 <= a <= b <= 1");
  Rational answer = v.measure(a, b);
  ledger.record(QueryKind::eval, player, a, b, answer);
  return answer;
}

// cut_i(x, a): smallest y with μ([x, y]) = a; one counted primitive query.
inline Rational measure_cut(const Valuation& v, const Rational& x, const Rational& a, QueryLedger& ledger,
                            std::size_t player = 0) {
  if (x < 0 || x > 1) throw DomainError("cut start " + format_rational(x) + " outside [0, 1]");
  Rational y = v.leftmost_point(x, a);
  ledger.record(QueryKind::cut, player, x, a, y);
  return y;
}

namespace detail {

// Smallest point of the closure of X that is >= x.
inline std::optional<Rational> clamp_up(const Subcake& X, const Rational& x) {
  for (const auto& p : X.intervals()) {
    if (p.hi < x) continue;
    return x < p.lo ? p.lo : x;
  }
  return std::nullopt;
}

// Largest point of the closure of X that is <= y.
inline std::optional<Rational> clamp_down(const Subcake& X, const Rational& y) {
  const auto& parts = X.intervals();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it->lo > y) continue;
    return y > it->hi ? it->hi : y;
  }
  return std::nullopt;
}

inline Rational cached_or_eval(const Valuation& v, const Rational& a, const Rational& b, GapCache& cache,
                               QueryLedger& ledger, std::size_t player) {
  if (auto known = cache.lookup(player, a, b)) return *known;
  Rational value = measure_eval(v, a, b, ledger, player);
  cache.record(player, a, b, value);
  return value;
}

inline Rational required(const GapCache& cache, std::size_t player, const Rational& a, const Rational& b,
                         const char* what) {
  auto known = cache.lookup(player, a, b);
  if (!known)
    throw InvariantViolation(std::string("subcake query needs the ") + what + " [" + format_rational(a) + ", " +
                             format_rational(b) + "] of player " + std::to_string(player) +
                             " but it is not known");
  return *known;
}

}  // namespace detail

// eval_i^X(x, y) = μ([x, y] ∩ X). Issues at most one primitive eval; the
// gaps between the intervals of X must already be known to the cache.
inline Rational subcake_eval(const Valuation& v, const Subcake& X, const Rational& x, const Rational& y,
                             GapCache& cache, QueryLedger& ledger, std::size_t player = 0) {
  if (x > y) throw DomainError("subcake_eval needs x <= y");
  auto lo = detail::clamp_up(X, x);
  auto hi = detail::clamp_down(X, y);
  if (!lo || !hi || *lo >= *hi) return Rational(0);
  const auto& parts = X.intervals();
  std::size_t first = X.locate(*lo);
  std::size_t last = X.locate(*hi);
  Rational gaps = 0;
  for (std::size_t k = first; k < last; ++k)
    gaps += detail::required(cache, player, parts[k].hi, parts[k + 1].lo, "gap");
  return detail::cached_or_eval(v, *lo, *hi, cache, ledger, player) - gaps;
}

// cut_i^X(x, a): smallest y with μ([x, y] ∩ X) = a. Issues at most one
// primitive eval (mass left in the interval holding x) and one primitive cut;
// the measures of the intervals of X must already be known to the cache.
inline Rational subcake_cut(const Valuation& v, const Subcake& X, const Rational& x, const Rational& a,
                            GapCache& cache, QueryLedger& ledger, std::size_t player = 0) {
  if (a < 0) throw DomainError("negative cut value");
  if (a == 0) return x;
  auto start = detail::clamp_up(X, x);
  if (!start) throw InfeasibleCut("cut start " + format_rational(x) + " lies right of the subcake");
  const auto& parts = X.intervals();
  std::size_t k = X.locate(*start);
  Rational remaining = a;
  Rational head = detail::cached_or_eval(v, *start, parts[k].hi, cache, ledger, player);
  if (remaining <= head) {
    Rational y = measure_cut(v, *start, remaining, ledger, player);
    cache.record(player, *start, y, remaining);
    return y;
  }
  remaining -= head;
  for (std::size_t m = k + 1; m < parts.size(); ++m) {
    Rational whole = detail::required(cache, player, parts[m].lo, parts[m].hi, "interval");
    if (remaining <= whole) {
      Rational y = measure_cut(v, parts[m].lo, remaining, ledger, player);
      cache.record(player, parts[m].lo, y, remaining);
      return y;
    }
    remaining -= whole;
  }
  throw InfeasibleCut("subcake cut value " + format_rational(a) + " exceeds the subcake mass right of " +
                      format_rational(x));
}

}  // namespace cake
