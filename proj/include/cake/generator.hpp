#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/json_io.hpp"
#include "cake/valuation.hpp"

namespace cake {

struct GeneratorOptions {
  std::size_t players = 3;
  std::size_t segments = 3;        // density pieces per valuation
  std::uint64_t seed = 1;
  std::size_t duplicates = 0;      // >= 2 plants that many identical valuations
  long max_denominator = 12;       // of the breakpoints
  long max_weight = 9;             // raw weights 0..max_weight before normalizing
};

namespace detail {

// Uniform-ish integer in [lo, hi] by plain modulo. std::uniform_int_distribution
// is implementation-defined; this keeps files identical across standard libraries.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

// Piecewise-constant density with `segments` pieces on random breakpoints,
// rescaled to total mass exactly 1. Some pieces may get density 0.
inline Valuation random_valuation(std::mt19937_64& rng, std::size_t segments, long max_denominator = 12,
                                  long max_weight = 9) {
  if (segments == 0) throw DomainError("a valuation needs at least one density piece");
  if (max_denominator < 2 || max_weight < 1) throw DomainError("generator bounds too small");
  std::set<Rational> cuts;
  for (int attempt = 0; cuts.size() + 1 < segments && attempt < 1000; ++attempt) {
    long den = detail::draw(rng, 2, max_denominator);
    long num = detail::draw(rng, 1, den - 1);
    cuts.insert(make_rational(num, den));
  }
  std::vector<Rational> points{Rational(0)};
  points.insert(points.end(), cuts.begin(), cuts.end());
  points.push_back(Rational(1));
  std::vector<long> weights;
  bool positive = false;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    weights.push_back(detail::draw(rng, 0, max_weight));
    positive = positive || weights.back() > 0;
  }
  if (!positive) weights[detail::draw(rng, 0, static_cast<long>(weights.size()) - 1)] = 1;
  Rational mass = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) mass += Rational(weights[k]) * (points[k + 1] - points[k]);
  std::vector<DensitySegment> segs;
  for (std::size_t k = 0; k < weights.size(); ++k)
    segs.push_back({Interval(points[k], points[k + 1]), Rational(weights[k]) / mass});
  return Valuation(std::move(segs));
}

// Players p1..pn. With duplicates = d >= 2, d positions chosen at random
// share one valuation and every other player differs from all the rest.
inline Instance generate_instance(const GeneratorOptions& opt) {
  if (opt.players == 0) throw DomainError("generator needs at least one player");
  if (opt.duplicates > opt.players) throw DomainError("more duplicates than players");
  std::mt19937_64 rng(opt.seed);
  std::vector<bool> planted(opt.players, false);
  if (opt.duplicates >= 2) {
    std::vector<std::size_t> slots(opt.players);
    for (std::size_t i = 0; i < opt.players; ++i) slots[i] = i;
    for (std::size_t k = 0; k < opt.duplicates; ++k) {
      std::size_t pick = k + static_cast<std::size_t>(detail::draw(rng, 0, static_cast<long>(opt.players - k) - 1));
      std::swap(slots[k], slots[pick]);
      planted[slots[k]] = true;
    }
  }
  std::vector<Valuation> made;
  auto fresh = [&] {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Valuation v = random_valuation(rng, opt.segments, opt.max_denominator, opt.max_weight);
      if (std::find(made.begin(), made.end(), v) == made.end()) return v;
    }
    throw DomainError("cannot draw " + std::to_string(opt.players) + " distinct valuations with " +
                      std::to_string(opt.segments) + " density pieces");
  };
  std::optional<Valuation> shared;
  if (opt.duplicates >= 2) {
    shared = fresh();
    made.push_back(*shared);
  }
  Instance inst;
  for (std::size_t i = 0; i < opt.players; ++i) {
    Valuation v = planted[i] ? *shared : fresh();
    if (!planted[i]) made.push_back(v);
    inst.players.push_back({"p" + std::to_string(i + 1), std::move(v)});
  }
  return inst;
}

}  // namespace cake
