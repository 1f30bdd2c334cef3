#include "monty/bayes_analysis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "monty/error.hpp"

namespace monty {

namespace {

std::string pair_str(Door a, Door b) {
  return "(pick " + std::to_string(a) + ", opened " + std::to_string(b) + ")";
}

}  // namespace

OddsVector OddsVector::from_weights(std::vector<Door> labels, std::vector<Rational> weights) {
  if (labels.size() != weights.size()) {
    throw Error(Errc::kDimensionMismatch, "odds labels and weights differ in length");
  }
  std::optional<Rational> smallest;
  for (const Rational& w : weights) {
    if (w.sign() < 0) throw Error(Errc::kNegativeProbability, "negative odds entry " + w.to_string());
    if (!w.is_zero() && (!smallest || w < *smallest)) smallest = w;
  }
  if (!smallest) throw Error(Errc::kUndefinedConditional, "all odds are zero");
  for (Rational& w : weights) w /= *smallest;
  OddsVector out;
  out.labels_ = std::move(labels);
  out.odds_ = std::move(weights);
  return out;
}

Rational OddsVector::at(Door label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? Rational(0) : odds_[static_cast<std::size_t>(it - labels_.begin())];
}

std::vector<Rational> OddsVector::probabilities() const {
  Rational total;
  for (const Rational& w : odds_) total += w;
  std::vector<Rational> out;
  out.reserve(odds_.size());
  for (const Rational& w : odds_) out.push_back(w / total);
  return out;
}

std::string OddsVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < odds_.size(); ++i) {
    if (i) out += ':';
    const Rational& w = odds_[i];
    out += w.denominator() == 1 ? w.numerator().str() : w.to_string();
  }
  return out;
}

Rational unconditional_switch_win(const GameSpec& spec) {
  Rational total;
  for (const Outcome& o : enumerate_outcomes(spec)) {
    if (o.win) total += o.prob;
  }
  return total;
}

OddsVector posterior_odds(const GameSpec& spec, Door pick, Door opened) {
  validate_spec(spec);
  const int n = spec.n_doors;
  check_door_index(n, pick);
  check_door_index(n, opened);
  if (spec.pick_dist.mass(pick).is_zero()) {
    throw Error(Errc::kUndefinedConditional, "pick has probability zero at " + pair_str(pick, opened));
  }
  std::vector<Door> labels;
  std::vector<Rational> weights;
  labels.reserve(static_cast<std::size_t>(n));
  weights.reserve(static_cast<std::size_t>(n));
  bool any = false;
  for (Door car = 0; car < n; ++car) {
    labels.push_back(car);
    const Rational& prior = spec.car_dist.mass(car);
    weights.push_back(prior.is_zero() ? Rational(0) : prior * spec.host.at(car, pick).mass(opened));
    any = any || !weights.back().is_zero();
  }
  if (!any) {
    throw Error(Errc::kUndefinedConditional, "condition has probability zero at " + pair_str(pick, opened));
  }
  return OddsVector::from_weights(std::move(labels), std::move(weights));
}

Rational conditional_switch_win(const GameSpec& spec, Door pick, Door opened) {
  const OddsVector odds = posterior_odds(spec, pick, opened);
  const Rational& s = spec.switch_rule.at(pick, opened);
  const Door target = switch_target(spec.n_doors, pick, opened);
  Rational total;
  for (const Rational& w : odds.odds()) total += w;
  return (s * odds.at(target) + (Rational(1) - s) * odds.at(pick)) / total;
}

std::vector<ConditionalReport> all_conditionals(const GameSpec& spec) {
  validate_spec(spec);
  const int n = spec.n_doors;
  struct Acc {
    Rational condition;
    Rational win;
  };
  std::map<std::pair<Door, Door>, Acc> acc;
  for (const auto& [car, p_car] : spec.car_dist.support()) {
    for (const auto& [pick, p_pick] : spec.pick_dist.support()) {
      const Rational p_cp = p_car * p_pick;
      for (const auto& [opened, p_open] : spec.host.at(car, pick).support()) {
        const Rational joint = p_cp * p_open;
        const Rational& s = spec.switch_rule.at(pick, opened);
        Acc& a = acc[{pick, opened}];
        a.condition += joint;
        if (car == switch_target(n, pick, opened)) a.win += joint * s;
        if (car == pick) a.win += joint * (Rational(1) - s);
      }
    }
  }
  std::vector<ConditionalReport> out;
  out.reserve(acc.size());
  for (auto& [key, a] : acc) {
    out.push_back({key.first, key.second, a.condition, a.win / a.condition});
  }
  return out;
}

Rational total_probability(const std::vector<ConditionalReport>& reports) {
  Rational total;
  for (const auto& r : reports) total += r.p_condition * r.p_switch_wins_given;
  return total;
}

bool symmetry_collapse_check(const GameSpec& spec) {
  const auto reports = all_conditionals(spec);
  return std::all_of(reports.begin(), reports.end(), [&](const ConditionalReport& r) {
    return r.p_switch_wins_given == reports.front().p_switch_wins_given;
  });
}

bool conditional_floor_holds(const GameSpec& spec) {
  const Rational half(1, 2);
  const auto reports = all_conditionals(spec);
  return std::all_of(reports.begin(), reports.end(),
                     [&](const ConditionalReport& r) { return r.p_switch_wins_given >= half; });
}

bool conditional_floor_check(const GameSpec& spec) {
  validate_spec(spec);
  if (spec.car_dist != make_uniform(spec.n_doors)) {
    throw Error(Errc::kInapplicableProposition, "car placement is not uniform");
  }
  if (!spec.switch_rule.is_always_switch()) {
    throw Error(Errc::kInapplicableProposition, "switch rule is not always-switch");
  }
  return conditional_floor_holds(spec);
}

namespace {

// Joint law of (opened, car, pick), marginalized over the final choice.
struct MoveTables {
  std::map<std::tuple<Door, Door, Door>, Rational> joint;  // (opened, car, pick)
  std::map<Door, Rational> opened;
  std::map<std::pair<Door, Door>, Rational> opened_car;
  std::map<std::pair<Door, Door>, Rational> opened_pick;
  std::map<std::pair<Door, Door>, Rational> car_pick;
  std::map<Door, Rational> car;
  std::map<Door, Rational> pick;
};

MoveTables move_tables(const GameSpec& spec) {
  MoveTables t;
  for (const Outcome& o : enumerate_outcomes(spec)) {
    t.joint[{o.opened, o.car, o.pick}] += o.prob;
    t.opened[o.opened] += o.prob;
    t.opened_car[{o.opened, o.car}] += o.prob;
    t.opened_pick[{o.opened, o.pick}] += o.prob;
    t.car_pick[{o.car, o.pick}] += o.prob;
    t.car[o.car] += o.prob;
    t.pick[o.pick] += o.prob;
  }
  return t;
}

template <class Map, class Key>
Rational lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

DependenceWitness dependence_from(const MoveTables& t, Door car, Door pick, Door opened) {
  const Rational p_open = lookup(t.opened, opened);
  if (p_open.is_zero()) {
    throw Error(Errc::kUndefinedConditional, "host move " + std::to_string(opened) + " has probability zero");
  }
  const Rational joint = lookup(t.joint, std::tuple{opened, car, pick}) / p_open;
  const Rational product =
      (lookup(t.opened_car, std::pair{opened, car}) / p_open) * (lookup(t.opened_pick, std::pair{opened, pick}) / p_open);
  return {car, pick, opened, joint, product};
}

}  // namespace

DependenceWitness conditional_dependence(const GameSpec& spec, Door car, Door pick, Door opened) {
  check_door_index(spec.n_doors, car);
  check_door_index(spec.n_doors, pick);
  check_door_index(spec.n_doors, opened);
  return dependence_from(move_tables(spec), car, pick, opened);
}

ColliderReport collider_check(const GameSpec& spec) {
  validate_spec(spec);
  if (spec.car_dist.is_point() || spec.pick_dist.is_point()) {
    throw Error(Errc::kInapplicableCheck, "car and pick laws must both be non-degenerate");
  }
  const int n = spec.n_doors;
  const MoveTables t = move_tables(spec);

  ColliderReport report{true, std::nullopt};
  for (Door car = 0; car < n && report.marginal_independence; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      if (lookup(t.car_pick, std::pair{car, pick}) != lookup(t.car, car) * lookup(t.pick, pick)) {
        report.marginal_independence = false;
        break;
      }
    }
  }
  for (const auto& [opened, _] : t.opened) {
    for (Door car = 0; car < n && !report.witness; ++car) {
      for (Door pick = 0; pick < n; ++pick) {
        DependenceWitness w = dependence_from(t, car, pick, opened);
        if (w.joint != w.product) {
          report.witness = std::move(w);
          break;
        }
      }
    }
    if (report.witness) break;
  }
  return report;
}

}  // namespace monty
