#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "monty/bayes_analysis.hpp"
#include "monty/error.hpp"
#include "support/oracles.hpp"

namespace monty {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected monty::Error";
  return Errc::kInvalidConfig;
}

std::vector<Rational> q_grid() {
  std::vector<Rational> grid;
  for (int k = 0; k <= 10; ++k) grid.emplace_back(k, 10);
  return grid;
}

TEST(Unconditional, StandardGameIsTwoThirdsForEveryBias) {
  for (const Rational& q : q_grid()) EXPECT_EQ(unconditional_switch_win(standard_game(q)), Rational(2, 3));
}

TEST(Unconditional, HundredDoors) { EXPECT_EQ(unconditional_switch_win(n_door_game(100)), Rational(99, 100)); }

TEST(Unconditional, SwitcherLeavesKnownCar) {
  GameSpec spec = standard_game(Rational(1, 2));
  spec.car_dist = make_point(3, 0);
  EXPECT_EQ(unconditional_switch_win(spec), Rational(0));
}

TEST(Unconditional, SwitcherWinsExactlyWhenStayerLoses) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    GameSpec spec = testing::random_spec(rng, 3 + trial % 3);
    spec.switch_rule = SwitchRule::always_switch(spec.n_doors);
    Rational hit;
    for (Door d = 0; d < spec.n_doors; ++d) hit += spec.car_dist.mass(d) * spec.pick_dist.mass(d);
    EXPECT_EQ(unconditional_switch_win(spec), Rational(1) - hit);
  }
}

TEST(PosteriorOdds, SymmetricHostGivesOneToTwo) {
  const OddsVector odds = posterior_odds(standard_game(Rational(1, 2)), 0, 2);
  EXPECT_EQ(odds.odds(), (std::vector<Rational>{Rational(1), Rational(2), Rational(0)}));
  EXPECT_EQ(odds.to_string(), "1:2:0");
  EXPECT_EQ(odds.probabilities(), (std::vector<Rational>{Rational(1, 3), Rational(2, 3), Rational(0)}));
}

TEST(PosteriorOdds, CarZeroToCarOneIsQToOne) {
  for (const Rational& q : q_grid()) {
    if (q.is_zero()) continue;
    const OddsVector odds = posterior_odds(standard_game(q), 0, 2);
    EXPECT_EQ(odds.at(0) / odds.at(1), q);
    EXPECT_EQ(odds.at(2), Rational(0));
  }
}

TEST(PosteriorOdds, ZeroBiasExcludesThePick) {
  const OddsVector odds = posterior_odds(standard_game(Rational(0)), 0, 2);
  EXPECT_EQ(odds.at(0), Rational(0));
  EXPECT_EQ(odds.at(1), Rational(1));
  EXPECT_EQ(conditional_switch_win(standard_game(Rational(0)), 0, 2), Rational(1));
}

TEST(PosteriorOdds, EqualityIsScaleFree) {
  const auto a = OddsVector::from_weights({0, 1, 2}, {Rational(1), Rational(2), Rational(0)});
  const auto b = OddsVector::from_weights({0, 1, 2}, {Rational(2), Rational(4), Rational(0)});
  const auto c = OddsVector::from_weights({0, 1, 2}, {Rational(1, 6), Rational(1, 3), Rational(0)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, OddsVector::from_weights({0, 1, 2}, {Rational(1), Rational(3), Rational(0)}));
}

TEST(PosteriorOdds, ZeroProbabilityConditionIsAnError) {
  const GameSpec spec = standard_game(Rational(1, 2));
  EXPECT_EQ(code_of([&] { posterior_odds(spec, 1, 2); }), Errc::kUndefinedConditional);  // pick 1 never happens
  EXPECT_EQ(code_of([&] { posterior_odds(spec, 0, 0); }), Errc::kUndefinedConditional);  // host never opens the pick
  GameSpec known = standard_game(Rational(1));
  known.car_dist = make_point(3, 1);
  EXPECT_EQ(code_of([&] { conditional_switch_win(known, 0, 1); }), Errc::kUndefinedConditional);
}

TEST(Conditional, FrozenValues) {
  EXPECT_EQ(conditional_switch_win(standard_game(Rational(1, 2)), 0, 2), Rational(2, 3));
  EXPECT_EQ(conditional_switch_win(standard_game(Rational(1)), 0, 2), Rational(1, 2));
  // Enumeration oracle: 3/4.
  EXPECT_EQ(conditional_switch_win(standard_game(Rational(1, 3)), 0, 2), Rational(3, 4));
  EXPECT_EQ(testing::condition_by_enumeration(standard_game(Rational(1, 3)), 0, 2), Rational(3, 4));
}

TEST(Conditional, OddsLawOneOverOnePlusQ) {
  for (const Rational& q : q_grid()) {
    EXPECT_EQ(conditional_switch_win(standard_game(q), 0, 2), Rational(1) / (Rational(1) + q));
  }
}

TEST(Conditional, OddsRouteMatchesEnumerationOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const GameSpec spec = testing::random_spec(rng, 3 + trial % 3);
    for (Door pick = 0; pick < spec.n_doors; ++pick) {
      for (Door opened = 0; opened < spec.n_doors; ++opened) {
        const auto oracle = testing::condition_by_enumeration(spec, pick, opened);
        if (oracle) {
          EXPECT_EQ(conditional_switch_win(spec, pick, opened), *oracle);
        } else {
          EXPECT_EQ(code_of([&] { conditional_switch_win(spec, pick, opened); }), Errc::kUndefinedConditional);
        }
      }
    }
  }
}

TEST(AllConditionals, StandardGameHalf) {
  const auto reports = all_conditionals(standard_game(Rational(1, 2)));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].opened, 1);
  EXPECT_EQ(reports[1].opened, 2);
  for (const auto& r : reports) {
    EXPECT_EQ(r.pick, 0);
    EXPECT_EQ(r.p_condition, Rational(1, 2));
    EXPECT_EQ(r.p_switch_wins_given, Rational(2, 3));
  }
}

TEST(AllConditionals, ExtremeBias) {
  const auto reports = all_conditionals(standard_game(Rational(1)));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].opened, 1);
  EXPECT_EQ(reports[0].p_switch_wins_given, Rational(1));
  EXPECT_EQ(reports[1].opened, 2);
  EXPECT_EQ(reports[1].p_switch_wins_given, Rational(1, 2));
}

TEST(AllConditionals, SymmetricGameHasSixEqualReports) {
  const auto reports = all_conditionals(symmetric_game());
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.p_switch_wins_given, Rational(2, 3));
    EXPECT_EQ(r.p_condition, Rational(1, 6));
  }
}

TEST(AllConditionals, AgreesWithOddsRouteAndTotalProbability) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const GameSpec spec = testing::random_spec(rng, 3 + trial % 3);
    const auto reports = all_conditionals(spec);
    for (const auto& r : reports) {
      EXPECT_GT(r.p_condition, Rational(0));
      EXPECT_EQ(r.p_switch_wins_given, conditional_switch_win(spec, r.pick, r.opened));
    }
    EXPECT_EQ(total_probability(reports), unconditional_switch_win(spec));
  }
}

TEST(SymmetryCollapse, Examples) {
  EXPECT_TRUE(symmetry_collapse_check(symmetric_game()));
  // 1/(1+q) = 3/5 against 3/4 for the other door
  EXPECT_FALSE(symmetry_collapse_check(standard_game(Rational(2, 3))));
  GameSpec single = standard_game(Rational(1));
  single.car_dist = make_point(3, 1);
  EXPECT_EQ(all_conditionals(single).size(), 1u);
  EXPECT_TRUE(symmetry_collapse_check(single));
}

TEST(SymmetryCollapse, CollapsedValueIsTheUnconditional) {
  for (int n : {3, 4, 7}) {
    const GameSpec spec = n_door_game(n);
    ASSERT_TRUE(symmetry_collapse_check(spec));
    EXPECT_EQ(all_conditionals(spec).front().p_switch_wins_given, unconditional_switch_win(spec));
  }
}

TEST(FloorCheck, HoldsAcrossBiasGrid) {
  for (const Rational& q : q_grid()) {
    const GameSpec spec = standard_game(q);
    EXPECT_TRUE(conditional_floor_check(spec));
    Rational lowest(1);
    for (const auto& r : all_conditionals(spec)) lowest = std::min(lowest, r.p_switch_wins_given);
    EXPECT_GE(lowest, Rational(1, 2));
    if (q == Rational(1)) EXPECT_EQ(lowest, Rational(1, 2));
  }
}

TEST(FloorCheck, SkewedPriorFailsHonestlyButIsOutsideTheHypothesis) {
  GameSpec spec = standard_game(Rational(1, 2));
  const std::vector<Rational> skew{Rational(9, 10), Rational(1, 20), Rational(1, 20)};
  spec.car_dist = validate_dist(skew);
  // Enumeration oracle: (1/20) / (9/20 + 1/20) = 1/10 for both opened doors.
  EXPECT_EQ(testing::condition_by_enumeration(spec, 0, 2), Rational(1, 10));
  EXPECT_EQ(conditional_switch_win(spec, 0, 1), Rational(1, 10));
  EXPECT_FALSE(conditional_floor_holds(spec));
  EXPECT_EQ(code_of([&] { conditional_floor_check(spec); }), Errc::kInapplicableProposition);

  GameSpec stays = standard_game(Rational(1, 2));
  stays.switch_rule = SwitchRule::always_stay(3);
  EXPECT_EQ(code_of([&] { conditional_floor_check(stays); }), Errc::kInapplicableProposition);
}

TEST(FloorCheck, UniformPriorRandomHostsNeverGoBelowHalf) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    GameSpec spec = testing::random_spec(rng, 3);
    spec.car_dist = make_uniform(3);
    spec.switch_rule = SwitchRule::always_switch(3);
    EXPECT_TRUE(conditional_floor_check(spec));
  }
}

TEST(Equivariance, PermutingDoorsPermutesConditionals) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 2;
    const GameSpec spec = testing::random_spec(rng, n);
    std::vector<Door> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const GameSpec moved = relabel_doors(spec, perm);
    for (const auto& r : all_conditionals(spec)) {
      EXPECT_EQ(conditional_switch_win(moved, perm[r.pick], perm[r.opened]), r.p_switch_wins_given);
    }
  }
}

TEST(Collider, SymmetricGame) {
  const ColliderReport report = collider_check(symmetric_game());
  EXPECT_TRUE(report.marginal_independence);
  ASSERT_TRUE(report.witness.has_value());
  // Oracle (exact conditioning by hand): first witness is opened 0, car 1, pick 1.
  EXPECT_EQ(report.witness->opened, 0);
  EXPECT_EQ(report.witness->car, 1);
  EXPECT_EQ(report.witness->pick, 1);
  EXPECT_EQ(report.witness->joint, Rational(1, 6));
  EXPECT_EQ(report.witness->product, Rational(1, 4));
}

TEST(Collider, ConditionOnDoorTwo) {
  const GameSpec spec = symmetric_game();
  const auto w = conditional_dependence(spec, 0, 0, 2);
  EXPECT_EQ(w.joint, Rational(1, 6));
  EXPECT_EQ(w.product, Rational(1, 4));
  const auto v = conditional_dependence(spec, 0, 1, 2);
  EXPECT_EQ(v.joint, Rational(1, 3));
  EXPECT_EQ(v.product, Rational(1, 4));
  EXPECT_EQ(code_of([&] { conditional_dependence(standard_game(Rational(0)), 0, 0, 0); }),
            Errc::kUndefinedConditional);
}

TEST(Collider, DegenerateLawsAreRejected) {
  EXPECT_EQ(code_of([] { collider_check(standard_game(Rational(1, 2))); }), Errc::kInapplicableCheck);
  GameSpec spec = symmetric_game();
  spec.car_dist = make_point(3, 2);
  EXPECT_EQ(code_of([&] { collider_check(spec); }), Errc::kInapplicableCheck);
}

}  // namespace
}  // namespace monty
