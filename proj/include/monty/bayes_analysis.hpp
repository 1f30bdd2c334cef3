#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monty/game_model.hpp"

namespace monty {

// Odds over car locations, defined up to a positive factor. Stored scaled so
// that the smallest nonzero entry is 1; equality is therefore scale-free.
class OddsVector {
 public:
  // Throws undefined-conditional when every weight is zero.
  static OddsVector from_weights(std::vector<Door> labels, std::vector<Rational> weights);

  const std::vector<Door>& labels() const { return labels_; }
  const std::vector<Rational>& odds() const { return odds_; }

  // Weight of one label; zero if absent.
  Rational at(Door label) const;

  // Entries normalized to sum to one.
  std::vector<Rational> probabilities() const;

  // "1:2:0"
  std::string to_string() const;

  friend bool operator==(const OddsVector&, const OddsVector&) = default;

 private:
  std::vector<Door> labels_;
  std::vector<Rational> odds_;
};

struct ConditionalReport {
  Door pick;
  Door opened;
  Rational p_condition;          // P(P1 = pick, host move = opened)
  Rational p_switch_wins_given;  // P(final = car | pick, opened)

  friend bool operator==(const ConditionalReport&, const ConditionalReport&) = default;
};

// P(final = car), summed over enumerate_outcomes.
Rational unconditional_switch_win(const GameSpec& spec);

// Posterior odds over car doors given (pick, opened): prior car mass times the
// likelihood of the host's move. Labels are all doors 0..n-1.
OddsVector posterior_odds(const GameSpec& spec, Door pick, Door opened);

// P(final = car | pick, opened), computed from the posterior odds.
Rational conditional_switch_win(const GameSpec& spec, Door pick, Door opened);

// One report per positive-probability (pick, opened), ascending. Built by a
// single pass over the support, independently of the odds route above.
std::vector<ConditionalReport> all_conditionals(const GameSpec& spec);

// Sum of p_condition * p_switch_wins_given over all_conditionals.
Rational total_probability(const std::vector<ConditionalReport>& reports);

// All conditionals share one value (vacuously true for a single condition).
bool symmetry_collapse_check(const GameSpec& spec);

// Every conditional switch-win probability is at least 1/2, evaluated for
// any spec without checking hypotheses.
bool conditional_floor_holds(const GameSpec& spec);

// Same inequality, but refuses specs outside the uniform-car / always-switch
// hypothesis with inapplicable-proposition.
bool conditional_floor_check(const GameSpec& spec);

// Collider structure of the car / pick / host-move graph.
struct DependenceWitness {
  Door car;
  Door pick;
  Door opened;
  Rational joint;    // P(Car = car, P1 = pick | opened)
  Rational product;  // P(Car = car | opened) * P(P1 = pick | opened)
};

struct ColliderReport {
  bool marginal_independence;  // P(c, p) == P(c) P(p) for every pair
  std::optional<DependenceWitness> witness;  // first (opened, car, pick) with joint != product
};

// Conditional joint and product for one (car, pick) given the host move.
// Throws undefined-conditional if the move has probability zero.
DependenceWitness conditional_dependence(const GameSpec& spec, Door car, Door pick, Door opened);

// Throws inapplicable-check if either the car or the pick law is a point mass.
ColliderReport collider_check(const GameSpec& spec);

}  // namespace monty
