// monty: command-line front end for the exact analysis, the matrix-game
// solver and the Monte Carlo cross-checks.
//
// Machine output (--json, CSV) numbers doors from 0; human-readable output
// says "Door 1" for door 0. Exit codes: 0 success, 2 usage or validation
// error, 1 internal error. Errors go to stderr as a one-line JSON object.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monty/bayes_analysis.hpp"
#include "monty/error.hpp"
#include "monty/montecarlo.hpp"
#include "monty/monty_game.hpp"
#include "monty/spec_json.hpp"

namespace {

using monty::Door;
using monty::Errc;
using monty::Error;
using monty::OrderedJson;
using monty::Rational;

constexpr int kUsageError = 2;
constexpr int kInternalError = 1;

std::string door(Door d) { return "Door " + std::to_string(d + 1); }

std::string rat(const Rational& r) { return r.to_string(); }

// Human form: integers without the "/1".
std::string pretty(const Rational& r) {
  return r.denominator() == 1 ? r.numerator().str() : r.to_string();
}

void emit_json(const OrderedJson& doc) { std::cout << doc.dump(2) << "\n"; }

struct SpecSource {
  std::string spec_file;
  std::string standard_q;
  int n_doors = 0;

  void attach(CLI::App* cmd, CLI::Option_group* group) {
    group->add_option("--spec", spec_file, "game-spec JSON file")->check(CLI::ExistingFile);
    group->add_option("--standard-q", standard_q, "standard 3-door game with host bias q (\"p/q\")");
    group->add_option("--n-doors", n_doors, "n-door game (host opens all goats but one)");
    (void)cmd;
  }

  monty::GameSpec load() const {
    if (!spec_file.empty()) return monty::load_spec_file(spec_file);
    if (!standard_q.empty()) return monty::standard_game(Rational::parse(standard_q));
    return monty::n_door_game(n_doors);
  }

  std::string describe() const {
    if (!spec_file.empty()) return "spec " + spec_file;
    if (!standard_q.empty()) return "standard game q=" + standard_q;
    return std::to_string(n_doors) + "-door game";
  }
};

std::string move_phrase(int n_doors, Door opened) {
  return n_doors == 3 ? "host opened " + door(opened) : "host left " + door(opened) + " closed";
}

// --- analyze ---------------------------------------------------------------

struct PairQuery {
  Door pick;
  Door opened;
};

PairQuery parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::kInvalidDoorIndex, "pair must look like PICK:OPENED");
  try {
    std::size_t used = 0;
    const int pick = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const int opened = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {pick, opened};
  } catch (const std::logic_error&) {
    throw Error(Errc::kInvalidDoorIndex, "pair must look like PICK:OPENED, got \"" + text + "\"");
  }
}

int run_analyze(const SpecSource& source, bool json, const std::vector<std::string>& pairs) {
  const monty::GameSpec spec = source.load();
  std::vector<PairQuery> queries;
  for (const auto& p : pairs) queries.push_back(parse_pair(p));

  const Rational unconditional = monty::unconditional_switch_win(spec);
  const auto reports = monty::all_conditionals(spec);
  const bool collapse = monty::symmetry_collapse_check(spec);
  const bool floor = monty::conditional_floor_holds(spec);

  if (json) {
    OrderedJson doc;
    doc["unconditional"] = rat(unconditional);
    doc["conditionals"] = OrderedJson::array();
    for (const auto& r : reports) {
      doc["conditionals"].push_back(OrderedJson{{"pick", r.pick},
                                                {"opened", r.opened},
                                                {"p_condition", rat(r.p_condition)},
                                                {"p_switch_wins", rat(r.p_switch_wins_given)}});
    }
    doc["symmetric_collapse"] = collapse;
    doc["floor_holds"] = floor;
    if (!queries.empty()) {
      doc["queries"] = OrderedJson::array();
      for (const auto& q : queries) {
        OrderedJson entry{{"pick", q.pick}, {"opened", q.opened}};
        try {
          entry["odds"] = monty::posterior_odds(spec, q.pick, q.opened).to_string();
          entry["p_switch_wins"] = rat(monty::conditional_switch_win(spec, q.pick, q.opened));
        } catch (const Error& e) {
          entry["error"] = std::string(monty::errc_name(e.code()));
        }
        doc["queries"].push_back(std::move(entry));
      }
    }
    emit_json(doc);
    return 0;
  }

  std::cout << "Game: " << source.describe() << " (" << spec.n_doors << " doors)\n";
  std::cout << "P(switch wins) = " << pretty(unconditional) << "\n";
  std::cout << "Given the first pick and the host's move:\n";
  for (const auto& r : reports) {
    std::cout << "  picked " << door(r.pick) << ", " << move_phrase(spec.n_doors, r.opened)
              << ": P(condition) = " << pretty(r.p_condition)
              << ", P(switch wins) = " << pretty(r.p_switch_wins_given) << "\n";
  }
  std::cout << "All conditionals equal: " << (collapse ? "yes" : "no") << "\n";
  std::cout << "Every conditional >= 1/2: " << (floor ? "yes" : "no") << "\n";
  for (const auto& q : queries) {
    std::cout << "Query picked " << door(q.pick) << ", " << move_phrase(spec.n_doors, q.opened) << ": ";
    try {
      const auto odds = monty::posterior_odds(spec, q.pick, q.opened);
      std::cout << "car odds " << odds.to_string() << ", P(switch wins) = "
                << pretty(monty::conditional_switch_win(spec, q.pick, q.opened)) << "\n";
    } catch (const Error& e) {
      std::cout << monty::errc_name(e.code()) << "\n";
    }
  }
  return 0;
}

// --- solve / matrix --------------------------------------------------------

std::string human_rule(const monty::PlayerPureStrategy& s) {
  const std::string rule = s.rule_name();
  if (rule == "always-switch") return "always switch";
  if (rule == "always-stay") return "always stay";
  for (Door d = 0; d < 3; ++d) {
    if (d != s.pick && s.switch_if_opened[static_cast<std::size_t>(d)]) return "switch only if " + door(d) + " is opened";
  }
  return rule;
}

int run_solve(int n_doors, bool json) {
  const monty::MontyMatrixGame game = monty::build_matrix(n_doors);
  const monty::MixedSolution lp = monty::solve_lp(game.matrix);
  const bool verified = monty::verify_saddle(game.matrix, lp);
  const monty::GameSolution sol = monty::decode_solution(game, lp);

  if (json) {
    OrderedJson doc;
    doc["value"] = rat(sol.value);
    doc["player"] = OrderedJson::array();
    for (const auto& [s, w] : sol.player_mixed) {
      doc["player"].push_back(OrderedJson{{"pick", s.pick}, {"rule", s.rule_name()}, {"w", rat(w)}});
    }
    doc["host"] = OrderedJson::array();
    for (const auto& [s, w] : sol.host_mixed) {
      doc["host"].push_back(OrderedJson{{"car", s.car}, {"free", s.free_choice}, {"w", rat(w)}});
    }
    doc["saddle_verified"] = verified;
    emit_json(doc);
    return 0;
  }
  std::cout << "Value of the game: " << pretty(sol.value) << "\n";
  std::cout << "Player mixture:\n";
  for (const auto& [s, w] : sol.player_mixed) {
    std::cout << "  " << pretty(w) << "  pick " << door(s.pick) << ", " << human_rule(s) << "\n";
  }
  std::cout << "Host mixture:\n";
  for (const auto& [s, w] : sol.host_mixed) {
    std::cout << "  " << pretty(w) << "  car behind " << door(s.car) << ", open " << door(s.free_choice)
              << " when free\n";
  }
  std::cout << "Saddle point verified: " << (verified ? "yes" : "no") << "\n";
  return 0;
}

int run_matrix(int n_doors, bool json) {
  const monty::MontyMatrixGame game = monty::build_matrix(n_doors);
  if (json) {
    OrderedJson doc;
    doc["players"] = OrderedJson::array();
    for (const auto& s : game.players) doc["players"].push_back(OrderedJson{{"pick", s.pick}, {"rule", s.rule_name()}});
    doc["hosts"] = OrderedJson::array();
    for (const auto& s : game.hosts) doc["hosts"].push_back(OrderedJson{{"car", s.car}, {"free", s.free_choice}});
    doc["payoff"] = OrderedJson::array();
    for (std::size_t i = 0; i < game.matrix.rows(); ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t j = 0; j < game.matrix.cols(); ++j) row.push_back(rat(game.matrix.at(i, j)));
      doc["payoff"].push_back(std::move(row));
    }
    emit_json(doc);
    return 0;
  }
  std::cout << "P(player wins); rows: player plans, columns: (car door, door opened when free)\n";
  std::printf("%-44s", "");
  for (const auto& h : game.hosts) std::printf("  C%d/F%d", h.car + 1, h.free_choice + 1);
  std::printf("\n");
  for (std::size_t i = 0; i < game.matrix.rows(); ++i) {
    const auto& s = game.players[i];
    std::printf("%-44s", ("pick " + door(s.pick) + ", " + human_rule(s)).c_str());
    for (std::size_t j = 0; j < game.matrix.cols(); ++j) std::printf("  %5s", pretty(game.matrix.at(i, j)).c_str());
    std::printf("\n");
  }
  return 0;
}

// --- simulate / sweep ------------------------------------------------------

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MONTY_SEED")) {
    const std::string text(env);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(text, &used);
      if (used == text.size() && text.find('-') == std::string::npos) return v;
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::kInvalidConfig, "MONTY_SEED is not an unsigned integer: \"" + text + "\"");
  }
  return 0;
}

int run_simulate(const SpecSource& source, bool minimax, const monty::SimConfig& cfg, bool json) {
  monty::SimResult result;
  std::optional<Rational> exact;
  std::string label;
  if (minimax) {
    const monty::MixedSolution named = monty::named_minimax_strategies();
    result = monty::simulate_strategy_pair(named.row_mix, named.col_mix, cfg);
    exact = monty::expected_payoff(monty::build_matrix(3).matrix, named.row_mix, named.col_mix);
    label = "minimax strategy pair";
  } else {
    const monty::GameSpec spec = source.load();
    result = monty::simulate(spec, cfg);
    exact = monty::unconditional_switch_win(spec);
    label = source.describe();
  }

  if (json) {
    OrderedJson doc;
    doc["seed"] = cfg.seed;
    doc["streams"] = cfg.parallel_streams;
    doc["wins"] = result.wins;
    doc["trials"] = result.trials;
    doc["rate"] = result.rate;
    doc["ci95_low"] = result.ci95_low;
    doc["ci95_high"] = result.ci95_high;
    doc["exact"] = rat(*exact);
    doc["per_condition"] = OrderedJson::array();
    for (const auto& c : result.per_condition) {
      doc["per_condition"].push_back(
          OrderedJson{{"pick", c.pick}, {"opened", c.opened}, {"wins", c.wins}, {"trials", c.trials}});
    }
    emit_json(doc);
    return 0;
  }
  std::printf("Simulated %s: %llu trials, seed %llu, %u stream(s)\n", label.c_str(),
              static_cast<unsigned long long>(result.trials), static_cast<unsigned long long>(cfg.seed),
              cfg.parallel_streams);
  std::printf("Wins: %llu  rate %.6f  3-sigma band [%.6f, %.6f]\n", static_cast<unsigned long long>(result.wins),
              result.rate, result.ci95_low, result.ci95_high);
  std::printf("Exact: %s (%.6f)\n", pretty(*exact).c_str(), exact->to_double());
  return 0;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw Error(Errc::kMalformedRational, "empty entry in q grid");
    grid.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  if (!text.empty() && text.back() == ',') throw Error(Errc::kMalformedRational, "empty entry in q grid");
  return grid;
}

int run_sweep(const std::string& grid_text, const monty::SimConfig& cfg, const std::string& out_path) {
  const std::string csv = monty::sweep_csv(monty::sweep_bias(parse_grid(grid_text), cfg));
  if (out_path.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::kInvalidConfig, "cannot write " + out_path);
  out << csv;
  return 0;
}

// --- validate --------------------------------------------------------------

int run_validate(const SpecSource& source, bool emit) {
  const monty::GameSpec spec = source.load();
  monty::validate_spec(spec);
  if (emit) {
    std::cout << monty::write_spec(spec);
  } else {
    std::cout << "ok: " << source.describe() << " is a valid " << spec.n_doors << "-door game\n";
  }
  return 0;
}

void report_error(std::string_view code, const std::string& message) {
  std::cerr << OrderedJson{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis, minimax solution and simulation of door games with a host"};
  app.require_subcommand(1);

  bool json = false;
  std::vector<std::string> pairs;
  SpecSource analyze_src;
  auto* analyze = app.add_subcommand("analyze", "exact switch-win probabilities, conditionals and checks");
  auto* analyze_group = analyze->add_option_group("source");
  analyze_src.attach(analyze, analyze_group);
  analyze_group->require_option(1);
  analyze->add_flag("--json", json, "machine-readable report");
  analyze->add_option("--pair", pairs, "also report posterior odds for PICK:OPENED (0-indexed), repeatable");

  int solve_doors = 3;
  auto* solve = app.add_subcommand("solve", "solve the player/host matrix game by exact linear programming");
  solve->add_option("--n-doors", solve_doors, "number of doors (only 3 supported)");
  solve->add_flag("--json", json, "machine-readable solution");

  int matrix_doors = 3;
  auto* matrix = app.add_subcommand("matrix", "print the pure-strategy payoff matrix");
  matrix->add_option("--n-doors", matrix_doors, "number of doors (only 3 supported)");
  matrix->add_flag("--json", json, "machine-readable matrix");

  SpecSource sim_src;
  bool minimax = false;
  monty::SimConfig cfg;
  cfg.n_trials = 100'000;
  std::optional<std::uint64_t> seed_flag;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the switch-win rate");
  auto* sim_group = simulate->add_option_group("source");
  sim_src.attach(simulate, sim_group);
  sim_group->add_flag("--minimax", minimax, "play the two minimax mixtures against each other");
  sim_group->require_option(1);
  simulate->add_option("--trials", cfg.n_trials, "number of trials");
  simulate->add_option("--seed", seed_flag, "64-bit seed (default: $MONTY_SEED, else 0)");
  simulate->add_option("--streams", cfg.parallel_streams, "worker streams; results do not depend on it");
  simulate->add_flag("--json", json, "machine-readable result");

  std::string grid;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "exact vs simulated P(switch wins | pick 1, opened 3) over host biases");
  sweep->add_option("--q-grid", grid, "comma-separated biases, e.g. \"0,1/2,1\"")->required();
  sweep->add_option("--trials", cfg.n_trials, "trials per bias");
  sweep->add_option("--seed", seed_flag, "base seed; row k uses seed + k");
  sweep->add_option("--streams", cfg.parallel_streams, "worker streams");
  sweep->add_option("--out", out_path, "write CSV here instead of stdout");

  SpecSource validate_src;
  bool emit = false;
  auto* validate = app.add_subcommand("validate", "check a game spec; --emit prints it in canonical form");
  auto* validate_group = validate->add_option_group("source");
  validate_src.attach(validate, validate_group);
  validate_group->require_option(1);
  validate->add_flag("--emit", emit, "print the canonical spec JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kUsageError;
  }

  try {
    if (*analyze) return run_analyze(analyze_src, json, pairs);
    if (*solve) return run_solve(solve_doors, json);
    if (*matrix) return run_matrix(matrix_doors, json);
    if (*simulate) {
      cfg.seed = resolve_seed(seed_flag);
      return run_simulate(sim_src, minimax, cfg, json);
    }
    if (*sweep) {
      cfg.seed = resolve_seed(seed_flag);
      return run_sweep(grid, cfg, out_path);
    }
    if (*validate) return run_validate(validate_src, emit);
  } catch (const Error& e) {
    report_error(monty::errc_name(e.code()), e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return kInternalError;
  }
  return kInternalError;
}
