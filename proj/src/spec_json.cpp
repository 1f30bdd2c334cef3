#include "monty/spec_json.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "monty/error.hpp"

namespace monty {

namespace {

OrderedJson dist_to_json(const DoorDist& dist) {
  OrderedJson arr = OrderedJson::array();
  for (const Rational& m : dist.dense()) arr.push_back(rational_to_json(m));
  return arr;
}

const OrderedJson& field(const OrderedJson& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::kMalformedSpec, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

int int_field(const OrderedJson& obj, const char* key) {
  const OrderedJson& v = field(obj, key);
  if (!v.is_number_integer()) {
    throw Error(Errc::kMalformedSpec, std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

DoorDist dist_from_json(const OrderedJson& arr, int n, const char* what) {
  if (!arr.is_array()) throw Error(Errc::kMalformedSpec, std::string(what) + " must be an array");
  if (static_cast<int>(arr.size()) != n) {
    throw Error(Errc::kDimensionMismatch, std::string(what) + " has " + std::to_string(arr.size()) +
                                              " entries for " + std::to_string(n) + " doors");
  }
  std::vector<Rational> mass;
  mass.reserve(arr.size());
  for (const auto& v : arr) mass.push_back(rational_from_json(v));
  return validate_dist(mass);
}

}  // namespace

OrderedJson rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const OrderedJson& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw Error(Errc::kMalformedRational, "expected a \"p/q\" string, got " + value.dump());
}

OrderedJson spec_to_json(const GameSpec& spec) {
  validate_spec(spec);
  const int n = spec.n_doors;
  OrderedJson doc;
  doc["n_doors"] = n;
  doc["car_dist"] = dist_to_json(spec.car_dist);
  doc["pick_dist"] = dist_to_json(spec.pick_dist);
  OrderedJson host = OrderedJson::array();
  for (Door car = 0; car < n; ++car) {
    for (Door pick = 0; pick < n; ++pick) {
      OrderedJson entry;
      entry["car"] = car;
      entry["pick"] = pick;
      entry["open"] = dist_to_json(spec.host.at(car, pick));
      host.push_back(std::move(entry));
    }
  }
  doc["host"] = std::move(host);
  OrderedJson rule = OrderedJson::array();
  for (Door pick = 0; pick < n; ++pick) {
    for (Door opened = 0; opened < n; ++opened) {
      if (pick == opened) continue;
      OrderedJson entry;
      entry["pick"] = pick;
      entry["opened"] = opened;
      entry["p_switch"] = rational_to_json(spec.switch_rule.at(pick, opened));
      rule.push_back(std::move(entry));
    }
  }
  doc["switch_rule"] = std::move(rule);
  return doc;
}

GameSpec spec_from_json(const OrderedJson& doc) {
  if (!doc.is_object()) throw Error(Errc::kMalformedSpec, "spec must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "n_doors" && key != "car_dist" && key != "pick_dist" && key != "host" && key != "switch_rule") {
      throw Error(Errc::kMalformedSpec, "unknown field \"" + key + "\"");
    }
  }
  const int n = int_field(doc, "n_doors");
  check_door_count(n);
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  GameSpec spec{n, dist_from_json(field(doc, "car_dist"), n, "car_dist"),
                dist_from_json(field(doc, "pick_dist"), n, "pick_dist"), HostPolicy{n, {}},
                SwitchRule::constant(n, Rational(0))};

  const OrderedJson& host = field(doc, "host");
  if (!host.is_array()) throw Error(Errc::kMalformedSpec, "host must be an array");
  std::vector<std::optional<DoorDist>> table(nn);
  for (const auto& entry : host) {
    const Door car = int_field(entry, "car");
    const Door pick = int_field(entry, "pick");
    check_door_index(n, car);
    check_door_index(n, pick);
    auto& slot = table[static_cast<std::size_t>(car) * n + pick];
    if (slot) throw Error(Errc::kMalformedSpec, "duplicate host entry");
    slot = dist_from_json(field(entry, "open"), n, "host.open");
  }
  spec.host.table.reserve(nn);
  for (auto& slot : table) {
    if (!slot) throw Error(Errc::kMalformedSpec, "host table is missing a (car, pick) entry");
    spec.host.table.push_back(std::move(*slot));
  }

  const OrderedJson& rule = field(doc, "switch_rule");
  if (!rule.is_array()) throw Error(Errc::kMalformedSpec, "switch_rule must be an array");
  std::vector<bool> seen(nn, false);
  for (const auto& entry : rule) {
    const Door pick = int_field(entry, "pick");
    const Door opened = int_field(entry, "opened");
    spec.switch_rule.at(pick, opened) = rational_from_json(field(entry, "p_switch"));
    const auto idx = static_cast<std::size_t>(pick) * n + opened;
    if (seen[idx]) throw Error(Errc::kMalformedSpec, "duplicate switch_rule entry");
    seen[idx] = true;
  }
  if (rule.size() != nn - static_cast<std::size_t>(n)) {
    throw Error(Errc::kMalformedSpec, "switch_rule must cover every (pick, opened) pair");
  }

  validate_spec(spec);
  return spec;
}

std::string write_spec(const GameSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

GameSpec read_spec(std::string_view text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kMalformedSpec, e.what());
  }
  return spec_from_json(doc);
}

GameSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kMalformedSpec, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_spec(buf.str());
}

}  // namespace monty
