#include "monty/monty_game.hpp"

#include <algorithm>

#include "monty/error.hpp"

namespace monty {

namespace {

constexpr int kDoors = 3;

void require_three(int n) {
  if (n != kDoors) throw Error(Errc::kUnsupportedSize, "strategy enumeration needs n = 3, got " + std::to_string(n));
}

Door third_door(Door a, Door b) { return 3 - a - b; }

std::pair<Door, Door> others(Door d) {
  return d == 0 ? std::pair{1, 2} : d == 1 ? std::pair{0, 2} : std::pair{0, 1};
}

}  // namespace

std::string PlayerPureStrategy::rule_name() const {
  const auto [a, b] = others(pick);
  const bool sa = switch_if_opened[static_cast<std::size_t>(a)];
  const bool sb = switch_if_opened[static_cast<std::size_t>(b)];
  if (sa && sb) return "always-switch";
  if (!sa && !sb) return "always-stay";
  return "switch-if-opened-" + std::to_string(sa ? a : b);
}

std::vector<PlayerPureStrategy> enumerate_player_strategies(int n) {
  require_three(n);
  std::vector<PlayerPureStrategy> out;
  for (Door pick = 0; pick < kDoors; ++pick) {
    const auto [a, b] = others(pick);
    for (int map = 0; map < 4; ++map) {
      PlayerPureStrategy s{pick, {false, false, false}};
      s.switch_if_opened[static_cast<std::size_t>(a)] = (map >> 1) & 1;
      s.switch_if_opened[static_cast<std::size_t>(b)] = map & 1;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<HostPureStrategy> enumerate_host_strategies(int n) {
  require_three(n);
  std::vector<HostPureStrategy> out;
  for (Door car = 0; car < kDoors; ++car) {
    const auto [a, b] = others(car);
    out.push_back({car, a});
    out.push_back({car, b});
  }
  return out;
}

Rational payoff(const PlayerPureStrategy& player, const HostPureStrategy& host) {
  const Door opened = player.pick != host.car ? third_door(player.pick, host.car) : host.free_choice;
  const Door final =
      player.switch_if_opened[static_cast<std::size_t>(opened)] ? third_door(player.pick, opened) : player.pick;
  return Rational(final == host.car ? 1 : 0);
}

MontyMatrixGame build_matrix(int n) {
  MontyMatrixGame game{enumerate_player_strategies(n), enumerate_host_strategies(n), PayoffMatrix(12, 6)};
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    for (std::size_t j = 0; j < game.hosts.size(); ++j) game.matrix.at(i, j) = payoff(game.players[i], game.hosts[j]);
  }
  return game;
}

GameSolution decode_solution(const MontyMatrixGame& game, const MixedSolution& sol) {
  if (sol.row_mix.size() != game.players.size() || sol.col_mix.size() != game.hosts.size()) {
    throw Error(Errc::kDimensionMismatch, "solution does not match the 12 x 6 game");
  }
  GameSolution out{sol.value, {}, {}};
  for (std::size_t i = 0; i < sol.row_mix.size(); ++i) {
    if (!sol.row_mix[i].is_zero()) out.player_mixed.emplace_back(game.players[i], sol.row_mix[i]);
  }
  for (std::size_t j = 0; j < sol.col_mix.size(); ++j) {
    if (!sol.col_mix[j].is_zero()) out.host_mixed.emplace_back(game.hosts[j], sol.col_mix[j]);
  }
  return out;
}

std::size_t player_index(const PlayerPureStrategy& s) {
  const auto all = enumerate_player_strategies(kDoors);
  auto it = std::find(all.begin(), all.end(), s);
  if (it == all.end()) throw Error(Errc::kInvalidDoorIndex, "not an enumerated player strategy");
  return static_cast<std::size_t>(it - all.begin());
}

std::size_t host_index(const HostPureStrategy& s) {
  const auto all = enumerate_host_strategies(kDoors);
  auto it = std::find(all.begin(), all.end(), s);
  if (it == all.end()) throw Error(Errc::kInvalidDoorIndex, "not an enumerated host strategy");
  return static_cast<std::size_t>(it - all.begin());
}

MixedSolution named_minimax_strategies() {
  MixedSolution sol{Rational(2, 3), std::vector<Rational>(12), std::vector<Rational>(6, Rational(1, 6))};
  const auto players = enumerate_player_strategies(kDoors);
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].rule_name() == "always-switch") sol.row_mix[i] = Rational(1, 3);
  }
  return sol;
}

}  // namespace monty
