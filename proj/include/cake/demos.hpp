#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cake/fairness.hpp"
#include "cake/instances.hpp"
#include "cake/protocols/baselines.hpp"
#include "cake/protocols/sym_prop.hpp"

namespace cake {

struct DemoResult {
  explicit DemoResult(std::string demo = {}) : name(std::move(demo)) {}

  std::string name;
  std::vector<std::string> lines;
  bool pass = true;

  void say(std::string line) { lines.push_back(std::move(line)); }

  void expect(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "  ok    " : "  FAIL  ") + what);
    pass = pass && ok;
  }
};

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"even-paz-not-aristotelian", "last-diminisher-not-aristotelian",
                                              "symprop-all-lebesgue-S-count", "symprop-concentrated-S-count"};
  return names;
}

namespace detail {

inline void describe(DemoResult& out, const Division& d, const Instance& inst) {
  for (std::size_t i = 0; i < d.size(); ++i)
    out.say("  " + inst.players[i].name + " gets " + d.pieces[i].to_string() + " worth " +
            format_rational(d.values[i]));
  out.say("  queries: " + std::to_string(d.ledger.eval_count()) + " eval, " + std::to_string(d.ledger.cut_count()) +
          " cut");
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline void describe_round(DemoResult& out, const RoundState& r) {
  std::string cuts;
  for (const auto& x : r.boundaries) cuts += (cuts.empty() ? "" : ", ") + format_rational(x);
  out.say("  round " + std::to_string(r.depth) + " on " + r.cake.to_string() + " with " +
          std::to_string(r.players.size()) + " players");
  out.say("    chosen cut vector (" + cuts + ")");
  out.say("    |S| = " + std::to_string(r.allocation_count) + ", distinct matched-piece sets = " +
          std::to_string(r.piece_subset_count) + ", least N_A = " + std::to_string(r.min_weight));
}

}  // namespace detail

inline DemoResult demo_even_paz() {
  DemoResult out{"even-paz-not-aristotelian"};
  Instance inst = even_paz_counterexample();
  auto vs = inst.valuations();
  out.say("Even-Paz on four players, p1 and p4 both Lebesgue:");
  Division d = even_paz(vs);
  detail::describe(out, d, inst);
  out.expect(vs[0] == vs[3], "p1 and p4 have the same measure");
  out.expect(d.values[0] == make_rational(1, 4), "p1 receives exactly 1/4");
  out.expect(d.values[3] == make_rational(49, 100), "p4 receives exactly 49/100");
  out.expect(d.values[3] > d.values[0], "49/100 > 1/4, so equal players are treated unequally");
  out.expect(!check_aristotelian(d, vs).pass, "aristotelian check fails");
  out.expect(check_proportional(d, vs).pass, "the division is still proportional");
  return out;
}

inline DemoResult demo_last_diminisher() {
  DemoResult out{"last-diminisher-not-aristotelian"};
  Instance inst = last_diminisher_counterexample();
  auto vs = inst.valuations();
  out.say("Last diminisher on three players, p1 and p2 both Lebesgue:");
  Division d = last_diminisher(vs);
  detail::describe(out, d, inst);
  out.expect(vs[0] == vs[1], "p1 and p2 have the same measure");
  out.expect(d.values[0] == make_rational(1, 3), "p1 receives exactly 1/3");
  out.expect(d.values[1] == make_rational(1, 2), "p2 receives exactly 1/2");
  out.expect(d.values[1] > d.values[0], "1/2 > 1/3, so equal players are treated unequally");
  out.expect(!check_aristotelian(d, vs).pass, "aristotelian check fails");
  out.expect(!check_envy_free(d, vs).pass, "p1 envies p2");
  return out;
}

inline DemoResult demo_all_lebesgue(std::size_t n = 3) {
  DemoResult out{"symprop-all-lebesgue-S-count"};
  Instance inst = all_lebesgue(n);
  auto vs = inst.valuations();
  out.say("SymProp on " + std::to_string(n) + " Lebesgue players:");
  RunContext ctx(vs);
  Division d = sym_prop(ctx);
  for (const auto& r : ctx.rounds()) detail::describe_round(out, r);
  detail::describe(out, d, inst);
  const auto& first = ctx.rounds().front();
  out.expect(first.allocation_count == detail::factorial(n),
             "|S| = " + std::to_string(first.allocation_count) + " = " + std::to_string(n) + "!");
  bool equal = true;
  for (const auto& v : d.values) equal = equal && v == Rational(1) / Rational(static_cast<long>(n));
  out.expect(equal, "every player receives exactly 1/" + std::to_string(n));
  return out;
}

inline DemoResult demo_concentrated(std::size_t n = 2) {
  DemoResult out{"symprop-concentrated-S-count"};
  Instance inst = concentrated_instance(n);
  auto vs = inst.valuations();
  out.say("SymProp on " + std::to_string(n) + " Lebesgue players and " + std::to_string(n + 1) +
          " players uniform on [" + std::to_string(2 * n) + "/" + std::to_string(2 * n + 1) + ", 1]:");
  RunContext ctx(vs);
  Division d = sym_prop(ctx);
  for (const auto& r : ctx.rounds()) detail::describe_round(out, r);
  detail::describe(out, d, inst);
  const auto& first = ctx.rounds().front();
  const std::size_t expected = detail::binomial(2 * n, n);
  out.expect(first.piece_subset_count == expected, "distinct matched-piece sets = " +
                                                       std::to_string(first.piece_subset_count) + " = C(" +
                                                       std::to_string(2 * n) + ", " + std::to_string(n) + ")");
  out.say("  raw allocations in S (each piece set times its player matchings): " +
          std::to_string(first.allocation_count));
  Rational fifth = Rational(1) / Rational(static_cast<long>(2 * n + 1));
  bool lebesgue_served = true;
  for (std::size_t i = 0; i < n; ++i) lebesgue_served = lebesgue_served && d.values[i] == fifth;
  out.expect(lebesgue_served, "each Lebesgue player receives exactly 1/" + std::to_string(2 * n + 1));
  out.expect(check_proportional(d, vs).pass, "the division is proportional");
  return out;
}

// Throws DomainError for unknown names.
inline DemoResult run_demo(const std::string& name, std::optional<std::size_t> n = std::nullopt) {
  if (name == "even-paz-not-aristotelian") return demo_even_paz();
  if (name == "last-diminisher-not-aristotelian") return demo_last_diminisher();
  if (name == "symprop-all-lebesgue-S-count") return demo_all_lebesgue(n.value_or(3));
  if (name == "symprop-concentrated-S-count") return demo_concentrated(n.value_or(2));
  throw DomainError("unknown demo '" + name + "'");
}

}  // namespace cake
