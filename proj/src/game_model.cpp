#include "monty/game_model.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "monty/error.hpp"

namespace monty {

namespace {

std::size_t flat(int n, Door row, Door col) {
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(col);
}

std::string pair_str(Door a, Door b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// The single door of a 3-door game that is neither a nor b (a != b).
Door third_door(Door a, Door b) { return 3 - a - b; }

DoorDist two_way(int n, Door low, Door high, const Rational& p_high) {
  std::vector<Rational> mass(static_cast<std::size_t>(n));
  mass[static_cast<std::size_t>(low)] = Rational(1) - p_high;
  mass[static_cast<std::size_t>(high)] = p_high;
  return validate_dist(mass);
}

}  // namespace

Door switch_target(int n_doors, Door pick, Door opened) {
  return n_doors == 3 ? third_door(pick, opened) : opened;
}

const DoorDist& HostPolicy::at(Door car, Door pick) const {
  check_door_index(n_doors, car);
  check_door_index(n_doors, pick);
  return table[flat(n_doors, car, pick)];
}

const Rational& SwitchRule::at(Door pick, Door opened) const {
  check_door_index(n_doors, pick);
  check_door_index(n_doors, opened);
  if (pick == opened) {
    throw Error(Errc::kInvalidDoorIndex, "switch rule undefined for pick == opened " + pair_str(pick, opened));
  }
  return p_switch[flat(n_doors, pick, opened)];
}

Rational& SwitchRule::at(Door pick, Door opened) {
  return const_cast<Rational&>(std::as_const(*this).at(pick, opened));
}

SwitchRule SwitchRule::constant(int n, const Rational& p) {
  check_door_count(n);
  SwitchRule rule{n, std::vector<Rational>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
  for (Door pick = 0; pick < n; ++pick) {
    for (Door opened = 0; opened < n; ++opened) {
      if (pick != opened) rule.p_switch[flat(n, pick, opened)] = p;
    }
  }
  return rule;
}

bool SwitchRule::is_always_switch() const {
  for (Door pick = 0; pick < n_doors; ++pick) {
    for (Door opened = 0; opened < n_doors; ++opened) {
      if (pick != opened && p_switch[flat(n_doors, pick, opened)] != Rational(1)) return false;
    }
  }
  return true;
}

GameSpec standard_game(const Rational& q) {
  if (q.sign() < 0 || q > Rational(1)) {
    throw Error(Errc::kInvalidBias, "host bias " + q.to_string() + " outside [0, 1]");
  }
  constexpr int n = 3;
  HostPolicy host{n, {}};
  host.table.reserve(n * n);
  for (Door car = 0; car < n; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      if (car != pick) {
        host.table.push_back(make_point(n, third_door(car, pick)));
      } else {
        const Door low = pick == 0 ? 1 : 0;
        const Door high = pick == 2 ? 1 : 2;
        host.table.push_back(two_way(n, low, high, q));
      }
    }
  }
  return GameSpec{n, make_uniform(n), make_point(n, 0), std::move(host), SwitchRule::always_switch(n)};
}

GameSpec symmetric_game() {
  GameSpec spec = standard_game(Rational(1, 2));
  spec.pick_dist = make_uniform(3);
  return spec;
}

GameSpec n_door_game(int n) {
  check_door_count(n);
  HostPolicy host{n, {}};
  host.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<Door> others;
  for (Door car = 0; car < n; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      if (car != pick) {
        host.table.push_back(make_point(n, n == 3 ? third_door(car, pick) : car));
        continue;
      }
      others.clear();
      for (Door d = 0; d < n; ++d) {
        if (d != pick) others.push_back(d);
      }
      host.table.push_back(make_uniform_over(n, others));
    }
  }
  return GameSpec{n, make_uniform(n), make_uniform(n), std::move(host), SwitchRule::always_switch(n)};
}

void validate_spec(const GameSpec& spec) {
  const int n = spec.n_doors;
  check_door_count(n);
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (spec.car_dist.n_doors() != n || spec.pick_dist.n_doors() != n) {
    throw Error(Errc::kDimensionMismatch, "car/pick distributions do not have " + std::to_string(n) + " doors");
  }
  if (spec.host.n_doors != n || spec.host.table.size() != nn) {
    throw Error(Errc::kDimensionMismatch, "host policy is not a " + std::to_string(n) + "-door table");
  }
  if (spec.switch_rule.n_doors != n || spec.switch_rule.p_switch.size() != nn) {
    throw Error(Errc::kDimensionMismatch, "switch rule is not a " + std::to_string(n) + "-door table");
  }
  for (Door car = 0; car < n; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      const DoorDist& move = spec.host.table[flat(n, car, pick)];
      if (move.n_doors() != n) {
        throw Error(Errc::kDimensionMismatch, "host distribution for " + pair_str(car, pick) + " has wrong length");
      }
      if (!move.mass(pick).is_zero()) {
        throw Error(Errc::kHostOpensPickedDoor, "host table entry (car, pick) = " + pair_str(car, pick));
      }
      if (n == 3) {
        if (!move.mass(car).is_zero()) {
          throw Error(Errc::kHostOpensCarDoor, "host table entry (car, pick) = " + pair_str(car, pick));
        }
      } else if (car != pick && move.mass(car) != Rational(1)) {
        // Leaving any door other than the car closed means the car door was opened.
        throw Error(Errc::kHostOpensCarDoor, "host table entry (car, pick) = " + pair_str(car, pick));
      }
    }
  }
  for (Door pick = 0; pick < n; ++pick) {
    for (Door opened = 0; opened < n; ++opened) {
      if (pick == opened) continue;
      const Rational& p = spec.switch_rule.p_switch[flat(n, pick, opened)];
      if (p.sign() < 0 || p > Rational(1)) {
        throw Error(Errc::kInvalidSwitchProbability,
                    "switch probability " + p.to_string() + " at " + pair_str(pick, opened));
      }
    }
  }
}

std::vector<Outcome> enumerate_outcomes(const GameSpec& spec) {
  validate_spec(spec);
  const int n = spec.n_doors;
  std::vector<Outcome> out;
  for (const auto& [car, p_car] : spec.car_dist.support()) {
    for (const auto& [pick, p_pick] : spec.pick_dist.support()) {
      const Rational p_cp = p_car * p_pick;
      for (const auto& [opened, p_open] : spec.host.at(car, pick).support()) {
        const Rational p_cpo = p_cp * p_open;
        const Rational& s = spec.switch_rule.at(pick, opened);
        const Door target = switch_target(n, pick, opened);
        // Finals in ascending door order.
        const Door lo = std::min(pick, target);
        const Door hi = std::max(pick, target);
        for (Door final : {lo, hi}) {
          const Rational p_final = final == target ? s : Rational(1) - s;
          if (p_final.is_zero()) continue;
          out.push_back(Outcome{car, pick, opened, final, final == car, p_cpo * p_final});
        }
      }
    }
  }
  return out;
}

GameSpec relabel_doors(const GameSpec& spec, std::span<const Door> perm) {
  validate_spec(spec);
  const int n = spec.n_doors;
  if (static_cast<int>(perm.size()) != n) {
    throw Error(Errc::kDimensionMismatch, "permutation length differs from door count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Door d : perm) {
    check_door_index(n, d);
    if (seen[static_cast<std::size_t>(d)]) throw Error(Errc::kInvalidDoorIndex, "not a permutation");
    seen[static_cast<std::size_t>(d)] = true;
  }
  auto to = [&](Door d) { return perm[static_cast<std::size_t>(d)]; };
  auto permute = [&](const DoorDist& dist) {
    std::vector<Rational> mass(static_cast<std::size_t>(n));
    for (const auto& e : dist.support()) mass[static_cast<std::size_t>(to(e.door))] = e.mass;
    return validate_dist(mass);
  };

  GameSpec out{n, permute(spec.car_dist), permute(spec.pick_dist), HostPolicy{n, spec.host.table},
               SwitchRule::always_stay(n)};
  for (Door car = 0; car < n; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      out.host.table[flat(n, to(car), to(pick))] = permute(spec.host.at(car, pick));
      if (car != pick) out.switch_rule.at(to(car), to(pick)) = spec.switch_rule.at(car, pick);
    }
  }
  return out;
}

}  // namespace monty
