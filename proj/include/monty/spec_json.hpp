#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "monty/game_model.hpp"

namespace monty {

using OrderedJson = nlohmann::ordered_json;

// Game-spec documents:
//   {"n_doors": n,
//    "car_dist": ["p/q", ...], "pick_dist": ["p/q", ...],
//    "host": [{"car": c, "pick": p, "open": ["p/q", ...]}, ...],
//    "switch_rule": [{"pick": p, "opened": o, "p_switch": "p/q"}, ...]}
// Rationals are canonical "p/q" strings; the reader also accepts bare
// integers. Writing is canonical: keys in the order above, host entries in
// (car, pick) order, switch entries in (pick, opened) order.
OrderedJson spec_to_json(const GameSpec& spec);
GameSpec spec_from_json(const OrderedJson& doc);

// Two-space indented document with a trailing newline.
std::string write_spec(const GameSpec& spec);
GameSpec read_spec(std::string_view text);
GameSpec load_spec_file(const std::string& path);

OrderedJson rational_to_json(const Rational& r);
Rational rational_from_json(const OrderedJson& value);

}  // namespace monty
