// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Values are checked against independent oracles from
// tests/support where one exists.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "monty/bayes_analysis.hpp"
#include "monty/game_model.hpp"
#include "monty/matrix_game.hpp"
#include "monty/montecarlo.hpp"
#include "monty/monty_game.hpp"
#include "monty/spec_json.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"

namespace {

using namespace monty;
using monty::testing::Frac;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<Rational> tenths() {
  std::vector<Rational> grid;
  for (int k = 0; k <= 10; ++k) grid.emplace_back(k, 10);
  return grid;
}

Verdict ac1_unconditional() {
  Verdict v;
  for (const auto& q : tenths()) {
    const Rational p = unconditional_switch_win(standard_game(q));
    v.require(p == Rational(2, 3), "q=" + q.to_string() + " gives " + p.to_string());
  }
  return v;
}

Verdict ac2_odds_law() {
  Verdict v;
  for (const auto& q : tenths()) {
    const GameSpec spec = standard_game(q);
    const Rational p = conditional_switch_win(spec, 0, 2);
    v.require(p == Rational(1) / (Rational(1) + q), "q=" + q.to_string() + " gives " + p.to_string());
    const auto by_enum = testing::condition_by_enumeration(spec, 0, 2);
    v.require(by_enum && *by_enum == p, "enumeration disagrees at q=" + q.to_string());
  }
  v.require(conditional_switch_win(standard_game(Rational(1, 2)), 0, 2) == Rational(2, 3), "q=1/2 is not 2/3");
  v.require(conditional_switch_win(standard_game(Rational(1)), 0, 2) == Rational(1, 2), "q=1 is not 1/2");
  return v;
}

Verdict ac3_total_probability() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 3;
    const GameSpec spec = testing::random_spec(rng, n);
    const Rational total = total_probability(all_conditionals(spec));
    const Rational direct = unconditional_switch_win(spec);
    v.require(total == direct, "spec " + std::to_string(i) + ": " + total.to_string() + " vs " + direct.to_string());
  }
  return v;
}

Verdict ac4_symmetry() {
  Verdict v;
  const auto reports = all_conditionals(symmetric_game());
  v.require(reports.size() == 6, "expected 6 conditionals, got " + std::to_string(reports.size()));
  for (const auto& r : reports) {
    v.require(r.p_switch_wins_given == Rational(2, 3),
              "(" + std::to_string(r.pick) + "," + std::to_string(r.opened) + ") = " + r.p_switch_wins_given.to_string());
  }
  v.require(symmetry_collapse_check(symmetric_game()), "symmetry_collapse_check is false");
  return v;
}

Verdict ac5_minimax() {
  Verdict v;
  const MontyMatrixGame game = build_matrix(3);
  v.require(game.matrix.rows() == 12 && game.matrix.cols() == 6, "matrix is not 12x6");
  const MixedSolution lp = solve_lp(game.matrix);
  v.require(lp.value == Rational(2, 3), "LP value " + lp.value.to_string());
  v.require(verify_saddle(game.matrix, lp), "LP solution is not a saddle point");
  const MixedSolution named = named_minimax_strategies();
  v.require(verify_saddle(game.matrix, named), "named strategies are not a saddle point");
  const std::vector<Rational> symmetric_host(6, Rational(1, 6));
  const auto rows = row_payoffs(game.matrix, symmetric_host);
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    if (game.players[i].rule_name() == "always-stay") {
      v.require(rows[i] == Rational(1, 3), "stay row " + std::to_string(i) + " = " + rows[i].to_string());
    }
  }
  return v;
}

Verdict ac6_lp_oracles() {
  Verdict v;
  const MontyMatrixGame game = build_matrix(3);
  std::vector<std::vector<Frac>> a(game.matrix.rows(), std::vector<Frac>(game.matrix.cols()));
  for (std::size_t i = 0; i < game.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < game.matrix.cols(); ++j) {
      const Rational& x = game.matrix.at(i, j);
      a[i][j] = Frac(x.numerator().convert_to<std::int64_t>(), x.denominator().convert_to<std::int64_t>());
    }
  }
  const Rational oracle = testing::matrix_game_value_by_vertices(a).to_rational();
  const Rational lp = solve_lp(game.matrix).value;
  v.require(lp == oracle, "12x6: LP " + lp.to_string() + " vs vertex oracle " + oracle.to_string());

  const PayoffMatrix pennies(2, 2, {Rational(1), Rational(0), Rational(0), Rational(1)});
  constexpr int kSteps = 1000;
  const double grid = testing::two_row_value_by_grid({{1, 0}, {0, 1}}, kSteps);
  const Rational pennies_lp = solve_lp(pennies).value;
  v.require(std::abs(pennies_lp.to_double() - grid) <= 1.0 / kSteps,
            "pennies: LP " + pennies_lp.to_string() + " vs grid " + std::to_string(grid));
  return v;
}

bool within_three_sigma(std::uint64_t wins, std::uint64_t trials, const Rational& exact) {
  const double p = exact.to_double();
  const double rate = static_cast<double>(wins) / static_cast<double>(trials);
  return std::abs(rate - p) <= three_sigma(p, trials);
}

Verdict ac7_monte_carlo() {
  Verdict v;
  const GameSpec spec = standard_game(Rational(1, 2));
  const SimResult big = simulate(spec, SimConfig{42, 1'000'000, 1});
  v.require(within_three_sigma(big.wins, big.trials, Rational(2, 3)),
            "10^6 rate " + std::to_string(big.rate) + " outside 2/3 +- 3 sigma");

  for (const auto& q : {Rational(1, 2), Rational(1, 5), Rational(1)}) {
    const GameSpec biased = standard_game(q);
    const SimResult small = simulate(biased, SimConfig{42, 100'000, 1});
    for (const auto& c : small.per_condition) {
      const Rational exact = conditional_switch_win(biased, c.pick, c.opened);
      v.require(within_three_sigma(c.wins, c.trials, exact),
                "q=" + q.to_string() + " condition (" + std::to_string(c.pick) + "," + std::to_string(c.opened) +
                    "): " + std::to_string(c.wins) + "/" + std::to_string(c.trials) + " vs " + exact.to_string());
    }
  }
  return v;
}

bool bit_identical(const SimResult& a, const SimResult& b) {
  return a == b && std::bit_cast<std::uint64_t>(a.rate) == std::bit_cast<std::uint64_t>(b.rate) &&
         std::bit_cast<std::uint64_t>(a.ci95_low) == std::bit_cast<std::uint64_t>(b.ci95_low) &&
         std::bit_cast<std::uint64_t>(a.ci95_high) == std::bit_cast<std::uint64_t>(b.ci95_high);
}

Verdict ac8_determinism() {
  Verdict v;
  const std::vector<std::pair<std::string, GameSpec>> specs = {
      {"standard q=1/2", standard_game(Rational(1, 2))},
      {"standard q=3/10", standard_game(Rational(3, 10))},
      {"10 doors", n_door_game(10)},
  };
  for (const auto& [name, spec] : specs) {
    for (std::uint64_t seed : {0ull, 42ull, 0xDEADBEEFull}) {
      const SimResult a = simulate(spec, SimConfig{seed, 200'003, 1});
      const SimResult b = simulate(spec, SimConfig{seed, 200'003, 1});
      const SimResult c = simulate(spec, SimConfig{seed, 200'003, 4});
      const SimResult d = simulate(spec, SimConfig{seed, 200'003, 4});
      v.require(bit_identical(a, b), name + ": repeated run differs");
      v.require(bit_identical(c, d), name + ": repeated 4-stream run differs");
      v.require(bit_identical(a, c), name + ": 1 vs 4 streams differ");
    }
  }
  const MixedSolution named = named_minimax_strategies();
  const SimResult p1 = simulate_strategy_pair(named.row_mix, named.col_mix, SimConfig{7, 100'000, 1});
  const SimResult p4 = simulate_strategy_pair(named.row_mix, named.col_mix, SimConfig{7, 100'000, 4});
  v.require(bit_identical(p1, p4), "strategy pair: 1 vs 4 streams differ");
  return v;
}

Verdict ac9_n_doors() {
  Verdict v;
  for (int n : {3, 10, 100}) {
    const auto run = testing::run_cli(MONTY_CLI_PATH, {"analyze", "--n-doors", std::to_string(n), "--json"});
    if (run.exit_code != 0) {
      v.require(false, "analyze --n-doors " + std::to_string(n) + " exited " + std::to_string(run.exit_code));
      continue;
    }
    const Rational reported = Rational::parse(OrderedJson::parse(run.out)["unconditional"].get<std::string>());
    v.require(reported == Rational(n - 1, n), "n=" + std::to_string(n) + " reports " + reported.to_string());
    if (n <= 10) {
      const Rational brute = testing::n_door_switch_win_bruteforce(n).to_rational();
      v.require(reported == brute, "n=" + std::to_string(n) + " brute force gives " + brute.to_string());
    }
  }
  return v;
}

// Joint law of (car, pick, opened) in the symmetric game, built directly:
// each (car, pick) has mass 1/9; a forced host opens the third door, a free
// host splits evenly between the two other doors.
std::map<std::tuple<int, int, int>, Frac> symmetric_joint() {
  std::map<std::tuple<int, int, int>, Frac> joint;
  for (int car = 0; car < 3; ++car) {
    for (int pick = 0; pick < 3; ++pick) {
      for (int opened = 0; opened < 3; ++opened) {
        if (opened == car || opened == pick) continue;
        joint[{car, pick, opened}] = Frac(1, 9) * (car == pick ? Frac(1, 2) : Frac(1));
      }
    }
  }
  return joint;
}

Verdict ac10_collider() {
  Verdict v;
  const auto joint = symmetric_joint();
  auto mass = [&](auto&& keep) {
    Frac s;
    for (const auto& [k, m] : joint) {
      if (keep(std::get<0>(k), std::get<1>(k), std::get<2>(k))) s = s + m;
    }
    return s;
  };

  // Oracle: marginal independence and the first dependent (opened, car, pick).
  bool oracle_independent = true;
  for (int c = 0; c < 3; ++c) {
    for (int p = 0; p < 3; ++p) {
      const Frac cp = mass([&](int cc, int pp, int) { return cc == c && pp == p; });
      const Frac pc = mass([&](int cc, int, int) { return cc == c; });
      const Frac pp = mass([&](int, int x, int) { return x == p; });
      oracle_independent = oracle_independent && cp == pc * pp;
    }
  }
  std::optional<std::tuple<int, int, int, Frac, Frac>> oracle_witness;
  for (int g = 0; g < 3 && !oracle_witness; ++g) {
    const Frac pg = mass([&](int, int, int o) { return o == g; });
    for (int c = 0; c < 3 && !oracle_witness; ++c) {
      for (int p = 0; p < 3 && !oracle_witness; ++p) {
        const Frac j = mass([&](int cc, int pp, int o) { return cc == c && pp == p && o == g; }) / pg;
        const Frac mc = mass([&](int cc, int, int o) { return cc == c && o == g; }) / pg;
        const Frac mp = mass([&](int, int pp, int o) { return pp == p && o == g; }) / pg;
        if (!(j == mc * mp)) oracle_witness = std::tuple{g, c, p, j, mc * mp};
      }
    }
  }
  v.require(oracle_independent, "oracle finds Car and P1 marginally dependent");
  v.require(oracle_witness.has_value(), "oracle finds no conditional dependence");
  if (!v.ok) return v;

  const ColliderReport report = collider_check(symmetric_game());
  v.require(report.marginal_independence == oracle_independent, "library disagrees on marginal independence");
  v.require(report.witness.has_value(), "library reports no witness");
  if (!v.ok) return v;
  const auto& [g, c, p, j, prod] = *oracle_witness;
  const DependenceWitness& w = *report.witness;
  v.require(w.opened == g && w.car == c && w.pick == p, "library witness is at a different (opened, car, pick)");
  v.require(w.joint == j.to_rational() && w.product == prod.to_rational(),
            "witness values " + w.joint.to_string() + " vs " + w.product.to_string() + ", oracle " +
                j.to_rational().to_string() + " vs " + prod.to_rational().to_string());
  v.require(w.joint != w.product, "witness is not a dependence");
  return v;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0: no runtime limit
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "unconditional switch win is 2/3 for every host bias", 1.0, ac1_unconditional},
      {"AC2", "conditional switch win is 1/(1+q)", 1.0, ac2_odds_law},
      {"AC3", "total probability over 100 random specs", 5.0, ac3_total_probability},
      {"AC4", "symmetric game: six conditionals all 2/3", 0.0, ac4_symmetry},
      {"AC5", "12x6 matrix game: value 2/3, saddles verified, stay row 1/3", 1.0, ac5_minimax},
      {"AC6", "LP value matches vertex and grid oracles", 0.0, ac6_lp_oracles},
      {"AC7", "Monte Carlo within 3 sigma of exact values", 30.0, ac7_monte_carlo},
      {"AC8", "simulation is deterministic and stream-count independent", 0.0, ac8_determinism},
      {"AC9", "n-door game gives (n-1)/n for n = 3, 10, 100", 0.0, ac9_n_doors},
      {"AC10", "collider: marginal independence and conditional dependence", 0.0, ac10_collider},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      v.ok = false;
      v.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    failures += v.ok ? 0 : 1;
    std::printf("%s %-4s %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, secs, v.ok ? "" : ": ",
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
