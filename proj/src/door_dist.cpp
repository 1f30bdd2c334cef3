#include "monty/door_dist.hpp"

#include <algorithm>
#include <string>

#include "monty/error.hpp"

namespace monty {

namespace {
const Rational kZero{0};
}  // namespace

void check_door_count(int n) {
  if (n < 3) throw Error(Errc::kInvalidDoorCount, "need at least 3 doors, got " + std::to_string(n));
}

void check_door_index(int n, Door door) {
  if (door < 0 || door >= n) {
    throw Error(Errc::kInvalidDoorIndex,
                "door " + std::to_string(door) + " outside [0, " + std::to_string(n) + ")");
  }
}

const Rational& DoorDist::mass(Door door) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), door,
                             [](const Entry& e, Door d) { return e.door < d; });
  if (it != support_.end() && it->door == door) return it->mass;
  return kZero;
}

std::vector<Rational> DoorDist::dense() const {
  std::vector<Rational> out(static_cast<std::size_t>(n_doors_));
  for (const auto& e : support_) out[static_cast<std::size_t>(e.door)] = e.mass;
  return out;
}

DoorDist make_uniform(int n) {
  check_door_count(n);
  std::vector<DoorDist::Entry> support;
  support.reserve(static_cast<std::size_t>(n));
  const Rational each(1, n);
  for (Door d = 0; d < n; ++d) support.push_back({d, each});
  return DoorDist(n, std::move(support));
}

DoorDist make_point(int n, Door door) {
  check_door_count(n);
  check_door_index(n, door);
  return DoorDist(n, {{door, Rational(1)}});
}

DoorDist validate_dist(std::span<const Rational> mass) {
  const int n = static_cast<int>(mass.size());
  check_door_count(n);
  Rational total;
  std::vector<DoorDist::Entry> support;
  for (Door d = 0; d < n; ++d) {
    const Rational& m = mass[static_cast<std::size_t>(d)];
    if (m.sign() < 0) {
      throw Error(Errc::kNegativeProbability,
                  "door " + std::to_string(d) + " has mass " + m.to_string());
    }
    total += m;
    if (!m.is_zero()) support.push_back({d, m});
  }
  if (total != Rational(1)) {
    throw Error(Errc::kNotNormalized, "masses sum to " + total.to_string());
  }
  return DoorDist(n, std::move(support));
}

DoorDist make_uniform_over(int n, std::span<const Door> doors) {
  check_door_count(n);
  if (doors.empty()) throw Error(Errc::kNotNormalized, "uniform over an empty door set");
  std::vector<Door> sorted(doors.begin(), doors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::kInvalidDoorIndex, "duplicate door in uniform support");
  }
  const Rational each(1, static_cast<std::int64_t>(sorted.size()));
  std::vector<DoorDist::Entry> support;
  for (Door d : sorted) {
    check_door_index(n, d);
    support.push_back({d, each});
  }
  return DoorDist(n, std::move(support));
}

}  // namespace monty
