#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "monty/door_dist.hpp"
#include "monty/matrix_game.hpp"

namespace monty {

// A complete plan for the player in the 3-door game: the first pick and,
// for each door the host might open, whether to switch.
struct PlayerPureStrategy {
  Door pick;
  std::array<bool, 3> switch_if_opened;  // entry at `pick` is unused

  // "always-switch", "always-stay", or "switch-if-opened-<door>".
  std::string rule_name() const;

  friend bool operator==(const PlayerPureStrategy&, const PlayerPureStrategy&) = default;
};

// A complete plan for the host: where the car goes and which door to open
// when the player's pick hides it.
struct HostPureStrategy {
  Door car;
  Door free_choice;

  friend bool operator==(const HostPureStrategy&, const HostPureStrategy&) = default;
};

// 12 strategies: picks in ascending order, and for each pick the decision
// maps (stay, stay), (stay, switch), (switch, stay), (switch, switch) over
// the two other doors in ascending order. Only n = 3 is supported.
std::vector<PlayerPureStrategy> enumerate_player_strategies(int n);

// 6 strategies: cars in ascending order, free choices ascending.
std::vector<HostPureStrategy> enumerate_host_strategies(int n);

// Win indicator (0 or 1) of the deterministic play.
Rational payoff(const PlayerPureStrategy& player, const HostPureStrategy& host);

struct MontyMatrixGame {
  std::vector<PlayerPureStrategy> players;
  std::vector<HostPureStrategy> hosts;
  PayoffMatrix matrix;
};

MontyMatrixGame build_matrix(int n);

struct GameSolution {
  Rational value;
  std::vector<std::pair<PlayerPureStrategy, Rational>> player_mixed;  // positive weights only
  std::vector<std::pair<HostPureStrategy, Rational>> host_mixed;      // positive weights only
};

GameSolution decode_solution(const MontyMatrixGame& game, const MixedSolution& sol);

// Player: pick uniformly, then always switch. Host: hide the car uniformly,
// toss a fair coin when there is a choice. Weights are over the enumerated
// strategy orders, with value 2/3.
MixedSolution named_minimax_strategies();

std::size_t player_index(const PlayerPureStrategy& s);
std::size_t host_index(const HostPureStrategy& s);

}  // namespace monty
