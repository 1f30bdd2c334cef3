#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monty/game_model.hpp"
#include "monty/matrix_game.hpp"

namespace monty {

// Draws an index from an exact rational law using a uniform 64-bit word u.
// Bucket k is chosen iff T(k-1) <= u < T(k) with T(k) = ceil(C(k) * 2^64)
// and C the cumulative mass, so each bucket's probability is its mass
// rounded to a multiple of 2^-64. Zero-mass buckets are never chosen.
class CategoricalSampler {
 public:
  // Throws negative-probability / not-normalized, or sampling-precision when
  // a cumulative mass is within 2^-64 of one before the last positive bucket.
  static CategoricalSampler from_masses(std::span<const Rational> masses);
  static CategoricalSampler from_dist(const DoorDist& dist);
  // Two buckets: 0 with probability 1 - p, 1 with probability p.
  static CategoricalSampler bernoulli(const Rational& p);

  std::uint32_t sample(std::uint64_t u) const;
  std::span<const std::uint64_t> thresholds() const { return thresholds_; }

 private:
  std::vector<std::uint64_t> thresholds_;
};

struct SimConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_trials = 1;
  unsigned parallel_streams = 1;
};

struct ConditionTally {
  Door pick;
  Door opened;
  std::uint64_t wins;
  std::uint64_t trials;

  friend bool operator==(const ConditionTally&, const ConditionTally&) = default;
};

// Interval is p_hat +/- 3 * sqrt(p_hat (1 - p_hat) / n), clipped to [0, 1];
// a normal approximation.
struct SimResult {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::vector<ConditionTally> per_condition;  // ascending (pick, opened), nonzero trials only

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Throws invalid-config for zero trials or zero streams.
void validate_config(const SimConfig& cfg);

// Trial i uses draws counter_draw(seed, 4 i + j), j = 0..3, for car, pick,
// host move and switch decision. Streams own contiguous trial ranges, so the
// result does not depend on parallel_streams.
SimResult simulate(const GameSpec& spec, const SimConfig& cfg);

// Mixtures are weights over enumerate_player_strategies(3) and
// enumerate_host_strategies(3). Trial i uses draws 2 i and 2 i + 1.
SimResult simulate_strategy_pair(std::span<const Rational> player_mix, std::span<const Rational> host_mix,
                                 const SimConfig& cfg);

struct SweepRow {
  Rational q;
  Rational exact;            // P(switch wins | pick 0, opened 2) = 1 / (1 + q)
  double empirical = 0.0;    // NaN when the condition was never observed
  double gap = 0.0;          // |empirical - exact|
  std::uint64_t trials = 0;  // trials simulated for this q
  std::uint64_t condition_trials = 0;
  std::uint64_t seed = 0;    // cfg.seed + row index
};

// Simulates standard_game(q) for each q. Throws invalid-bias before any
// simulation if some q is outside [0, 1].
std::vector<SweepRow> sweep_bias(std::span<const Rational> q_values, const SimConfig& cfg);

// Header "q,exact,empirical,gap,trials,seed" and one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Half-width of the 3-sigma binomial band for a known probability p.
double three_sigma(double p, std::uint64_t n);

}  // namespace monty
