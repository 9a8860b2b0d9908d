#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cake/division.hpp"
#include "cake/error.hpp"
#include "cake/protocols/symmetric_envy_free.hpp"
#include "cake/query.hpp"

namespace cake {

// A concrete violation: `player` holds `held` by their own measure and
// compares it against `compared` (their value of `other`'s piece, or
// `other`'s own value, depending on the property).
struct Witness {
  std::size_t player = 0;
  std::optional<std::size_t> other;
  Rational held;
  Rational compared;
  std::optional<std::vector<std::size_t>> order;  // symmetric: the input order that disagreed
};

struct Verdict {
  explicit Verdict(std::string name = {}) : property(std::move(name)) {}

  std::string property;
  bool pass = true;
  std::optional<Witness> witness;
};

struct FairnessReport {
  std::string algorithm;
  std::vector<std::vector<Rational>> value_table;  // [i][j] = μ_i(X_j)
  std::vector<Verdict> verdicts;
  std::size_t eval_count = 0;
  std::size_t cut_count = 0;
  std::optional<std::size_t> query_bound;

  bool pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

namespace detail {

inline void check_sizes(const Division& d, std::span<const Valuation> vs) {
  if (d.size() != vs.size())
    throw DomainError("division has " + std::to_string(d.size()) + " pieces for " + std::to_string(vs.size()) +
                      " players");
}

}  // namespace detail

// [i][j] = μ_i(X_j) by direct integration.
inline std::vector<std::vector<Rational>> value_table(const Division& d, std::span<const Valuation> vs) {
  detail::check_sizes(d, vs);
  std::vector<std::vector<Rational>> t(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& piece : d.pieces) t[i].push_back(oracle_direct_measure(vs[i], piece));
  return t;
}

// μ_i(X_i) >= μ_i(cake)/n
inline Verdict check_proportional(const Division& d, std::span<const Valuation> vs) {
  auto t = value_table(d, vs);
  Verdict v{"proportional"};
  const Rational n(static_cast<long>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Rational share = oracle_direct_measure(vs[i], d.ambient) / n;
    if (t[i][i] < share) {
      v.pass = false;
      v.witness = Witness{i, std::nullopt, t[i][i], share, std::nullopt};
      break;
    }
  }
  return v;
}

// μ_i(X_i) >= μ_i(X_j)
inline Verdict check_envy_free(const Division& d, std::span<const Valuation> vs) {
  auto t = value_table(d, vs);
  Verdict v{"envy-free"};
  for (std::size_t i = 0; i < vs.size() && v.pass; ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && t[i][i] < t[i][j]) {
        v.pass = false;
        v.witness = Witness{i, j, t[i][i], t[i][j], std::nullopt};
        break;
      }
  return v;
}

// μ_i(X_i) = μ_j(X_j)
inline Verdict check_equitable(const Division& d, std::span<const Valuation> vs) {
  auto t = value_table(d, vs);
  Verdict v{"equitable"};
  for (std::size_t j = 1; j < vs.size(); ++j)
    if (t[j][j] != t[0][0]) {
      v.pass = false;
      v.witness = Witness{0, j, t[0][0], t[j][j], std::nullopt};
      break;
    }
  return v;
}

// μ_i = μ_j (same canonical density) implies μ_i(X_i) = μ_j(X_j)
inline Verdict check_aristotelian(const Division& d, std::span<const Valuation> vs) {
  auto t = value_table(d, vs);
  Verdict v{"aristotelian"};
  for (std::size_t i = 0; i < vs.size() && v.pass; ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] && t[i][i] != t[j][j]) {
        v.pass = false;
        v.witness = Witness{i, j, t[i][i], t[j][j], std::nullopt};
        break;
      }
  return v;
}

// Per-player values of one run, credited back to the original players.
struct OrderRun {
  std::vector<std::size_t> order;  // order[k] = original player at input position k
  std::vector<Rational> values;    // values[i] = original player i's value
};

struct SymmetrySweep {
  std::vector<OrderRun> runs;
  Verdict verdict{"symmetric"};
};

// Runs `protocol` on every input order and compares each original player's
// value across all of them.
inline SymmetrySweep check_symmetric(const Procedure& protocol, std::span<const Valuation> vs,
                                     std::size_t max_players = 7) {
  const std::size_t n = vs.size();
  if (n == 0) throw DomainError("symmetry check needs at least one player");
  if (n > max_players)
    throw CapabilityError("symmetry check over " + std::to_string(n) + "! orders exceeds the guard of " +
                          std::to_string(max_players) + " players");
  SymmetrySweep sweep;
  for (const auto& sigma : all_permutations(n)) {
    auto order = permuted(vs, sigma);
    Division d = protocol(order);
    OrderRun run{sigma, std::vector<Rational>(n)};
    for (std::size_t k = 0; k < n; ++k) run.values[sigma[k]] = oracle_direct_measure(vs[sigma[k]], d.pieces[k]);
    sweep.runs.push_back(std::move(run));
  }
  const auto& first = sweep.runs.front().values;
  for (const auto& run : sweep.runs) {
    for (std::size_t i = 0; i < n; ++i)
      if (run.values[i] != first[i]) {
        sweep.verdict.pass = false;
        sweep.verdict.witness = Witness{i, std::nullopt, first[i], run.values[i], run.order};
        return sweep;
      }
  }
  return sweep;
}

// n^2 + n(n-1)(2n-1)/6 + n(n-1)/2
inline std::size_t aristo_prop_query_bound(std::size_t n) {
  return n * n + n * (n - 1) * (2 * n - 1) / 6 + n * (n - 1) / 2;
}

// sum over η = 1..n of 2η^2 + η(η-1)
inline std::size_t sym_prop_query_bound(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t e = 1; e <= n; ++e) total += 2 * e * e + e * (e - 1);
  return total;
}

// Closed-form bound for the algorithms that have one.
inline std::optional<std::size_t> query_bound(const std::string& algorithm, std::size_t n) {
  if (algorithm == "aristoprop") return aristo_prop_query_bound(n);
  if (algorithm == "symprop") return sym_prop_query_bound(n);
  return std::nullopt;
}

// Witness on failure: held = primitives used, compared = the bound.
inline Verdict check_query_bound(const std::string& algorithm, std::size_t n, std::size_t total) {
  auto bound = query_bound(algorithm, n);
  if (!bound) throw CapabilityError("no query bound known for " + algorithm);
  Verdict v{"query-bound"};
  if (total > *bound) {
    v.pass = false;
    v.witness = Witness{0, std::nullopt, Rational(static_cast<long>(total)), Rational(static_cast<long>(*bound)),
                        std::nullopt};
  }
  return v;
}

inline Verdict check_query_bound(const Division& d) { return check_query_bound(d.algorithm, d.size(), d.ledger.total()); }

struct LedgerCounts {
  std::size_t eval = 0;
  std::size_t cut = 0;
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"proportional", "envy-free", "equitable", "aristotelian",
                                              "symmetric", "query-bound"};
  return names;
}

// Evaluates the named properties. "symmetric" reruns `protocol` on every
// order, so it needs one; unknown names throw DomainError. `counts`
// overrides the ledger for divisions read back from a file.
inline FairnessReport verify(const Division& d, std::span<const Valuation> vs,
                             const std::vector<std::string>& properties, const Procedure& protocol = {},
                             std::optional<LedgerCounts> counts = std::nullopt) {
  for (const auto& p : properties)
    if (std::find(property_names().begin(), property_names().end(), p) == property_names().end())
      throw DomainError("unknown property '" + p + "'");
  FairnessReport r;
  r.algorithm = d.algorithm;
  r.value_table = value_table(d, vs);
  r.eval_count = counts ? counts->eval : d.ledger.eval_count();
  r.cut_count = counts ? counts->cut : d.ledger.cut_count();
  r.query_bound = query_bound(d.algorithm, d.size());
  for (const auto& p : properties) {
    if (p == "proportional") r.verdicts.push_back(check_proportional(d, vs));
    else if (p == "envy-free") r.verdicts.push_back(check_envy_free(d, vs));
    else if (p == "equitable") r.verdicts.push_back(check_equitable(d, vs));
    else if (p == "aristotelian") r.verdicts.push_back(check_aristotelian(d, vs));
    else if (p == "query-bound") r.verdicts.push_back(check_query_bound(d.algorithm, d.size(), r.eval_count + r.cut_count));
    else if (p == "symmetric") {
      if (!protocol) throw CapabilityError("symmetric check needs the protocol that produced the division");
      r.verdicts.push_back(check_symmetric(protocol, vs).verdict);
    }
  }
  return r;
}

}  // namespace cake
