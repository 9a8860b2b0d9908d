#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using cake::Division;
using cake::Interval;
using cake::make_rational;
using cake::Rational;
using cake::Subcake;
using cake::Valuation;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

std::vector<Valuation> random_players(std::uint64_t seed, std::size_t n, std::size_t dup = 0) {
  cake::GeneratorOptions o;
  o.players = n;
  o.seed = seed;
  o.segments = 2 + seed % 4;
  o.duplicates = dup;
  return cake::generate_instance(o).valuations();
}

void expect_tiles_unit(const Division& d) {
  Subcake all;
  Rational length = 0;
  for (const auto& p : d.pieces) {
    all = all.unite(p);
    length += p.length();
  }
  EXPECT_EQ(all, Subcake::unit());
  EXPECT_EQ(length, Rational(1));
}

}  // namespace

TEST(CutAndChoose, Examples) {
  std::vector<Valuation> leb(2, Valuation::lebesgue());
  Division d = cake::cut_and_choose(leb);
  EXPECT_EQ(d.values, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  // The chooser is indifferent and takes the left half.
  EXPECT_EQ(d.pieces[1], Subcake::between(0, q(1, 2)));

  std::vector<Valuation> vs{Valuation::lebesgue(), Valuation::uniform_on(q(1, 2), 1)};
  Division e = cake::cut_and_choose(vs);
  EXPECT_EQ(e.pieces[1], Subcake::between(q(1, 2), 1));
  EXPECT_EQ(e.values[1], Rational(1));
  EXPECT_EQ(e.values[0], q(1, 2));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto one = random_players(seed, 1);
    std::vector<Valuation> same{one[0], one[0]};
    Division f = cake::cut_and_choose(same);
    EXPECT_EQ(f.values, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  }
  std::vector<Valuation> three(3, Valuation::lebesgue());
  EXPECT_THROW(cake::cut_and_choose(three), cake::CapabilityError);
}

TEST(LastDiminisher, CounterexampleValues) {
  auto vs = cake::last_diminisher_counterexample().valuations();
  Division d = cake::last_diminisher(vs);
  EXPECT_EQ(d.pieces[0], Subcake::between(0, q(1, 3)));
  EXPECT_EQ(d.pieces[2], Subcake::between(q(1, 3), q(1, 2)));
  EXPECT_EQ(d.pieces[1], Subcake::between(q(1, 2), 1));
  EXPECT_EQ(d.values[0], q(1, 3));
  EXPECT_EQ(d.values[1], q(1, 2));
}

TEST(LastDiminisher, LebesgueAndSinglePlayer) {
  std::vector<Valuation> leb(3, Valuation::lebesgue());
  Division d = cake::last_diminisher(leb);
  EXPECT_EQ(d.pieces[0], Subcake::between(0, q(1, 3)));
  EXPECT_EQ(d.pieces[1], Subcake::between(q(1, 3), q(2, 3)));
  EXPECT_EQ(d.pieces[2], Subcake::between(q(2, 3), 1));
  std::vector<Valuation> one{Valuation::uniform_on(0, q(1, 2))};
  EXPECT_EQ(cake::last_diminisher(one).pieces[0], Subcake::unit());
}

TEST(EvenPaz, CounterexampleValues) {
  auto vs = cake::even_paz_counterexample().valuations();
  Division d = cake::even_paz(vs);
  EXPECT_EQ(d.values[0], q(1, 4));
  EXPECT_EQ(d.values[3], q(49, 100));
  EXPECT_EQ(d.pieces[0], Subcake::between(0, q(1, 4)));
  EXPECT_EQ(d.pieces[3], Subcake::between(q(51, 100), 1));
}

TEST(EvenPaz, LebesgueAndTwoPlayers) {
  std::vector<Valuation> leb(4, Valuation::lebesgue());
  for (const auto& v : cake::even_paz(leb).values) EXPECT_EQ(v, q(1, 4));
  // p1's mark 3/4 lies right of p2's mark 1/2, so p2 goes left of 1/2.
  std::vector<Valuation> two{Valuation::uniform_on(q(1, 2), 1), Valuation::lebesgue()};
  Division d = cake::even_paz(two);
  EXPECT_EQ(d.pieces[1], Subcake::between(0, q(1, 2)));
  EXPECT_EQ(d.pieces[0], Subcake::between(q(1, 2), 1));
  EXPECT_EQ(d.values, (std::vector<Rational>{Rational(1), q(1, 2)}));
}

TEST(SelfridgeConway, IdenticalPlayersGetAThirdEach) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto one = random_players(seed, 1);
    std::vector<Valuation> same(3, one[0]);
    Division d = cake::selfridge_conway(same);
    for (const auto& v : d.values) EXPECT_EQ(v, q(1, 3));
    expect_tiles_unit(d);
  }
}

TEST(SelfridgeConway, TrimmedCase) {
  std::vector<Valuation> vs{Valuation::lebesgue(), Valuation::uniform_on(q(2, 3), 1), Valuation::uniform_on(q(2, 3), 1)};
  Division d = cake::selfridge_conway(vs);
  EXPECT_EQ(d.values, (std::vector<Rational>{q(4, 9), q(1, 3), q(1, 3)}));
  EXPECT_TRUE(cake::check_envy_free(d, vs).pass);
  expect_tiles_unit(d);
  std::vector<Valuation> two(2, Valuation::lebesgue());
  EXPECT_THROW(cake::selfridge_conway(two), cake::CapabilityError);
}

TEST(SelfridgeConway, EnvyFreeOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto vs = random_players(seed, 3);
    Division d = cake::selfridge_conway(vs);
    EXPECT_TRUE(cake::check_envy_free(d, vs).pass) << "seed " << seed;
    expect_tiles_unit(d);
  }
}

TEST(Kuhn, Examples) {
  std::vector<Valuation> leb(3, Valuation::lebesgue());
  for (const auto& v : cake::kuhn(leb).values) EXPECT_EQ(v, q(1, 3));
  std::vector<Valuation> one{Valuation::lebesgue()};
  EXPECT_EQ(cake::kuhn(one).pieces[0], Subcake::unit());
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto vs = random_players(seed, 4);
    EXPECT_TRUE(cake::check_proportional(cake::kuhn(vs), vs).pass) << "seed " << seed;
  }
}

TEST(Baselines, ProportionalTilingAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::size_t n = 1 + seed % 6;
    auto vs = random_players(seed, n);
    for (auto* f : {&cake::last_diminisher, &cake::even_paz, &cake::kuhn}) {
      Division a = f(vs), b = f(vs);
      expect_tiles_unit(a);
      EXPECT_TRUE(cake::check_proportional(a, vs).pass) << a.algorithm << " seed " << seed;
      EXPECT_EQ(a.pieces, b.pieces);
      ASSERT_EQ(a.ledger.trace().size(), b.ledger.trace().size());
      for (std::size_t k = 0; k < a.ledger.trace().size(); ++k) {
        EXPECT_EQ(a.ledger.trace()[k].answer, b.ledger.trace()[k].answer);
        EXPECT_EQ(a.ledger.trace()[k].player, b.ledger.trace()[k].player);
      }
    }
  }
}

TEST(Baselines, ValuesComeFromDirectIntegration) {
  auto vs = random_players(77, 4);
  Division d = cake::even_paz(vs);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(d.values[i], oracle::Cdf(vs[i]).measure(d.pieces[i]));
}
