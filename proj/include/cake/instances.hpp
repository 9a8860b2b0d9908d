#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "cake/json_io.hpp"
#include "cake/valuation.hpp"

namespace cake {

namespace detail {

inline Valuation steps(std::vector<std::tuple<long, long, long, long, long, long>> parts) {
  // (lo num, lo den, hi num, hi den, density num, density den)
  std::vector<DensitySegment> segs;
  for (auto [a, b, c, d, e, f] : parts) segs.push_back({Interval(make_rational(a, b), make_rational(c, d)), make_rational(e, f)});
  return Valuation(std::move(segs));
}

inline Instance named(std::vector<Valuation> vs) {
  Instance inst;
  for (std::size_t i = 0; i < vs.size(); ++i) inst.players.push_back({"p" + std::to_string(i + 1), std::move(vs[i])});
  return inst;
}

}  // namespace detail

// Four players, μ1 = μ4 Lebesgue. μ2 and μ3 give [0, 1/2] half their mass
// and μ3 puts 1/4 on [1/2, 51/100], so Even-Paz hands player 1 a quarter
// of the cake and player 4 the stretch [51/100, 1].
inline Instance even_paz_counterexample() {
  return detail::named({
      Valuation::lebesgue(),
      detail::steps({{0, 1, 1, 2, 1, 1}, {3, 4, 1, 1, 2, 1}}),
      detail::steps({{0, 1, 1, 2, 1, 1}, {1, 2, 51, 100, 25, 1}, {51, 100, 1, 1, 25, 49}}),
      Valuation::lebesgue(),
  });
}

// Three players, μ1 = μ2 Lebesgue; μ3([0, 2/5]) = 1/3 and μ3([1/3, 1/2]) = 1/3,
// so player 3 takes [1/3, 1/2] and leaves player 2 half the cake.
inline Instance last_diminisher_counterexample() {
  return detail::named({
      Valuation::lebesgue(),
      Valuation::lebesgue(),
      detail::steps({{0, 1, 1, 3, 1, 2}, {1, 3, 2, 5, 5, 2}, {2, 5, 1, 2, 5, 3}, {1, 2, 1, 1, 1, 1}}),
  });
}

inline Instance all_lebesgue(std::size_t n) {
  return detail::named(std::vector<Valuation>(n, Valuation::lebesgue()));
}

// 2n + 1 players: n Lebesgue, n + 1 uniform on [2n/(2n+1), 1].
inline Instance concentrated_instance(std::size_t n) {
  std::vector<Valuation> vs(n, Valuation::lebesgue());
  const long m = static_cast<long>(2 * n + 1);
  for (std::size_t k = 0; k <= n; ++k) vs.push_back(Valuation::uniform_on(make_rational(m - 1, m), Rational(1)));
  return detail::named(std::move(vs));
}

}  // namespace cake
