#pragma once

#include <span>
#include <vector>

#include "monty/door_dist.hpp"
#include "monty/rational.hpp"

namespace monty {

// How the host's move is encoded depends on the door count.
//
// With 3 doors the host opens exactly one door and the recorded door is the
// one he opened. With n > 3 doors the host opens every unchosen goat door but
// one, so the set of opened doors is recorded by the single unchosen door he
// leaves closed. In both cases the recorded door is never the pick, and the
// player's switch target is a function of (pick, recorded door).
Door switch_target(int n_doors, Door pick, Door opened);

// Law of the host's move given (car, pick). One distribution per pair.
struct HostPolicy {
  int n_doors = 0;
  std::vector<DoorDist> table;  // row-major, index car * n + pick

  const DoorDist& at(Door car, Door pick) const;
};

// Probability of switching for every (pick, opened) pair with pick != opened.
struct SwitchRule {
  int n_doors = 0;
  std::vector<Rational> p_switch;  // row-major, index pick * n + opened; diagonal ignored

  const Rational& at(Door pick, Door opened) const;
  Rational& at(Door pick, Door opened);

  static SwitchRule constant(int n, const Rational& p);
  static SwitchRule always_switch(int n) { return constant(n, Rational(1)); }
  static SwitchRule always_stay(int n) { return constant(n, Rational(0)); }

  bool is_always_switch() const;
};

// The four actions: car placement, first pick, host move, final choice.
// Car and pick are independent.
struct GameSpec {
  int n_doors = 0;
  DoorDist car_dist;
  DoorDist pick_dist;
  HostPolicy host;
  SwitchRule switch_rule;
};

struct Outcome {
  Door car;
  Door pick;
  Door opened;
  Door final;
  bool win;
  Rational prob;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Three doors, uniform car, pick fixed at door 0, always switch. When the
// pick hides the car the host opens the higher-numbered free door with
// probability q (door 2 for pick 0) and the lower one otherwise.
GameSpec standard_game(const Rational& q);

// standard_game(1/2) with the pick uniform over all three doors.
GameSpec symmetric_game();

// n doors, uniform car and pick, host opens all unchosen goat doors but one,
// always switch. When the pick hides the car the door left closed is uniform
// over the other n - 1 doors.
GameSpec n_door_game(int n);

// Throws monty::Error on the first violated invariant.
void validate_spec(const GameSpec& spec);

// All positive-probability outcomes, in (car, pick, opened, final) order.
std::vector<Outcome> enumerate_outcomes(const GameSpec& spec);

// Renames door d to perm[d] throughout every component of the spec.
GameSpec relabel_doors(const GameSpec& spec, std::span<const Door> perm);

}  // namespace monty
