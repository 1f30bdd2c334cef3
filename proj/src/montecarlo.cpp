#include "monty/montecarlo.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <thread>

#include "monty/bayes_analysis.hpp"
#include "monty/error.hpp"
#include "monty/kernels.hpp"
#include "monty/monty_game.hpp"

namespace monty {

namespace {

constexpr std::size_t kBlock = 1024;

// ceil(c * 2^64) for 0 <= c < 1, or sampling-precision if it reaches 2^64.
std::uint64_t threshold_for(const Rational& cumulative) {
  if (cumulative.is_zero()) return 0;
  const BigInt num = cumulative.numerator();
  const BigInt den = cumulative.denominator();
  const BigInt t = ((num << 64) + den - 1) / den;
  if (t >> 64 != 0) {
    throw Error(Errc::kSamplingPrecision, "cumulative mass " + cumulative.to_string() + " is within 2^-64 of one");
  }
  return t.convert_to<std::uint64_t>();
}

struct Tally {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  std::vector<std::array<std::uint64_t, 2>> cond;  // (wins, trials) per pick * n + opened

  explicit Tally(int n) : cond(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {0, 0}) {}

  void add(int n, Door pick, Door opened, bool win) {
    auto& c = cond[static_cast<std::size_t>(pick) * static_cast<std::size_t>(n) + static_cast<std::size_t>(opened)];
    c[0] += win;
    c[1] += 1;
    wins += win;
    trials += 1;
  }

  void merge(const Tally& other) {
    wins += other.wins;
    trials += other.trials;
    for (std::size_t i = 0; i < cond.size(); ++i) {
      cond[i][0] += other.cond[i][0];
      cond[i][1] += other.cond[i][1];
    }
  }
};

SimResult finish(const Tally& t, int n) {
  SimResult r;
  r.wins = t.wins;
  r.trials = t.trials;
  r.rate = static_cast<double>(t.wins) / static_cast<double>(t.trials);
  const double half = 3.0 * std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(t.trials));
  r.ci95_low = std::max(0.0, r.rate - half);
  r.ci95_high = std::min(1.0, r.rate + half);
  for (Door pick = 0; pick < n; ++pick) {
    for (Door opened = 0; opened < n; ++opened) {
      const auto& c = t.cond[static_cast<std::size_t>(pick) * static_cast<std::size_t>(n) + static_cast<std::size_t>(opened)];
      if (c[1] > 0) r.per_condition.push_back({pick, opened, c[0], c[1]});
    }
  }
  return r;
}

// Runs `work(begin, end, tally)` over contiguous trial ranges, one per stream.
template <class Work>
Tally run_streams(const SimConfig& cfg, int n, Work work) {
  const std::uint64_t streams = cfg.parallel_streams;
  std::vector<Tally> parts(streams, Tally(n));
  auto range = [&](std::uint64_t s) {
    return std::pair{cfg.n_trials / streams * s + std::min<std::uint64_t>(s, cfg.n_trials % streams),
                     cfg.n_trials / streams * (s + 1) + std::min<std::uint64_t>(s + 1, cfg.n_trials % streams)};
  };
  if (streams == 1) {
    work(0, cfg.n_trials, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(streams);
    for (std::uint64_t s = 0; s < streams; ++s) {
      workers.emplace_back([&, s] {
        const auto [begin, end] = range(s);
        work(begin, end, parts[s]);
      });
    }
  }
  Tally total(n);
  for (const Tally& p : parts) total.merge(p);
  return total;
}

std::size_t flat(int n, Door a, Door b) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

}  // namespace

CategoricalSampler CategoricalSampler::from_masses(std::span<const Rational> masses) {
  Rational total;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < masses.size(); ++k) {
    if (masses[k].sign() < 0) throw Error(Errc::kNegativeProbability, "mass " + masses[k].to_string());
    total += masses[k];
    if (!masses[k].is_zero()) last_positive = k;
  }
  if (total != Rational(1)) throw Error(Errc::kNotNormalized, "masses sum to " + total.to_string());
  CategoricalSampler s;
  Rational cumulative;
  for (std::size_t k = 0; k < last_positive; ++k) {
    cumulative += masses[k];
    s.thresholds_.push_back(threshold_for(cumulative));
  }
  return s;
}

CategoricalSampler CategoricalSampler::from_dist(const DoorDist& dist) {
  CategoricalSampler s;
  const auto support = dist.support();
  Rational cumulative;
  std::uint64_t current = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    // Doors before this entry share the threshold reached so far.
    while (static_cast<Door>(s.thresholds_.size()) < support[i].door) s.thresholds_.push_back(current);
    if (i + 1 == support.size()) break;
    cumulative += support[i].mass;
    current = threshold_for(cumulative);
    s.thresholds_.push_back(current);
  }
  return s;
}

CategoricalSampler CategoricalSampler::bernoulli(const Rational& p) {
  const std::array<Rational, 2> masses{Rational(1) - p, p};
  return from_masses(masses);
}

std::uint32_t CategoricalSampler::sample(std::uint64_t u) const { return kernels::categorical_one(thresholds_, u); }

void validate_config(const SimConfig& cfg) {
  if (cfg.n_trials == 0) throw Error(Errc::kInvalidConfig, "n_trials must be positive");
  if (cfg.parallel_streams == 0) throw Error(Errc::kInvalidConfig, "parallel_streams must be positive");
}

double three_sigma(double p, std::uint64_t n) { return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

SimResult simulate(const GameSpec& spec, const SimConfig& cfg) {
  validate_spec(spec);
  validate_config(cfg);
  const int n = spec.n_doors;

  const CategoricalSampler car = CategoricalSampler::from_dist(spec.car_dist);
  const CategoricalSampler pick = CategoricalSampler::from_dist(spec.pick_dist);
  std::vector<std::optional<CategoricalSampler>> host(flat(n, n, 0));
  std::vector<std::optional<CategoricalSampler>> sw(flat(n, n, 0));
  for (const auto& c : spec.car_dist.support()) {
    for (const auto& p : spec.pick_dist.support()) {
      const DoorDist& move = spec.host.at(c.door, p.door);
      host[flat(n, c.door, p.door)] = CategoricalSampler::from_dist(move);
      for (const auto& o : move.support()) {
        auto& slot = sw[flat(n, p.door, o.door)];
        if (!slot) slot = CategoricalSampler::bernoulli(spec.switch_rule.at(p.door, o.door));
      }
    }
  }

  auto work = [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
    std::array<std::array<std::uint64_t, kBlock>, 4> draws;
    std::array<std::uint32_t, kBlock> cars;
    std::array<std::uint32_t, kBlock> picks;
    for (std::uint64_t t0 = begin; t0 < end; t0 += kBlock) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - t0));
      for (std::size_t j = 0; j < 4; ++j) {
        kernels::counter_draws(cfg.seed, 4 * t0 + j, 4, std::span(draws[j].data(), len));
      }
      kernels::categorical(car.thresholds(), std::span(draws[0].data(), len), std::span(cars.data(), len));
      kernels::categorical(pick.thresholds(), std::span(draws[1].data(), len), std::span(picks.data(), len));
      for (std::size_t k = 0; k < len; ++k) {
        const Door c = static_cast<Door>(cars[k]);
        const Door p = static_cast<Door>(picks[k]);
        const Door opened = static_cast<Door>(host[flat(n, c, p)]->sample(draws[2][k]));
        const bool switched = sw[flat(n, p, opened)]->sample(draws[3][k]) == 1;
        const Door final = switched ? switch_target(n, p, opened) : p;
        tally.add(n, p, opened, final == c);
      }
    }
  };
  return finish(run_streams(cfg, n, work), n);
}

SimResult simulate_strategy_pair(std::span<const Rational> player_mix, std::span<const Rational> host_mix,
                                 const SimConfig& cfg) {
  validate_mixture(player_mix, 12);
  validate_mixture(host_mix, 6);
  validate_config(cfg);
  const MontyMatrixGame game = build_matrix(3);
  const CategoricalSampler row = CategoricalSampler::from_masses(player_mix);
  const CategoricalSampler col = CategoricalSampler::from_masses(host_mix);

  struct Play {
    Door pick;
    Door opened;
    bool win;
  };
  std::array<Play, 72> plays{};
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& p = game.players[i];
      const auto& h = game.hosts[j];
      const Door opened = p.pick != h.car ? 3 - p.pick - h.car : h.free_choice;
      plays[i * 6 + j] = {p.pick, opened, game.matrix.at(i, j) == Rational(1)};
    }
  }

  auto work = [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
    std::array<std::array<std::uint64_t, kBlock>, 2> draws;
    std::array<std::array<std::uint32_t, kBlock>, 2> picked;
    for (std::uint64_t t0 = begin; t0 < end; t0 += kBlock) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - t0));
      for (std::size_t j = 0; j < 2; ++j) {
        kernels::counter_draws(cfg.seed, 2 * t0 + j, 2, std::span(draws[j].data(), len));
      }
      kernels::categorical(row.thresholds(), std::span(draws[0].data(), len), std::span(picked[0].data(), len));
      kernels::categorical(col.thresholds(), std::span(draws[1].data(), len), std::span(picked[1].data(), len));
      for (std::size_t k = 0; k < len; ++k) {
        const Play& play = plays[picked[0][k] * 6 + picked[1][k]];
        tally.add(3, play.pick, play.opened, play.win);
      }
    }
  };
  return finish(run_streams(cfg, 3, work), 3);
}

std::vector<SweepRow> sweep_bias(std::span<const Rational> q_values, const SimConfig& cfg) {
  validate_config(cfg);
  std::vector<GameSpec> specs;
  specs.reserve(q_values.size());
  for (const Rational& q : q_values) specs.push_back(standard_game(q));

  std::vector<SweepRow> rows;
  rows.reserve(q_values.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    SweepRow row;
    row.q = q_values[k];
    row.exact = conditional_switch_win(specs[k], 0, 2);
    row.trials = cfg.n_trials;
    row.seed = cfg.seed + k;
    SimConfig run = cfg;
    run.seed = row.seed;
    const SimResult sim = simulate(specs[k], run);
    row.empirical = std::numeric_limits<double>::quiet_NaN();
    for (const auto& c : sim.per_condition) {
      if (c.pick == 0 && c.opened == 2) {
        row.condition_trials = c.trials;
        row.empirical = static_cast<double>(c.wins) / static_cast<double>(c.trials);
      }
    }
    row.gap = std::abs(row.empirical - row.exact.to_double());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "q,exact,empirical,gap,trials,seed\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%llu,%llu\n", r.empirical, r.gap,
                  static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.seed));
    out += r.q.to_string() + "," + r.exact.to_string() + buf;
  }
  return out;
}

}  // namespace monty
