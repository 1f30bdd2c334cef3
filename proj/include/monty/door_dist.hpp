#pragma once

#include <span>
#include <vector>

#include "monty/rational.hpp"

namespace monty {

using Door = int;

// Exact probability distribution over the doors 0..n-1 (n >= 3).
//
// Storage is sparse: only doors with positive mass are kept, in ascending
// door order. The n-door host tables would otherwise be cubic in n.
class DoorDist {
 public:
  struct Entry {
    Door door;
    Rational mass;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int n_doors() const { return n_doors_; }

  // Mass of a single door; zero for doors outside the support.
  const Rational& mass(Door door) const;

  // Positive-mass entries in ascending door order.
  std::span<const Entry> support() const { return support_; }

  // Length-n vector including zeros.
  std::vector<Rational> dense() const;

  // True when exactly one door carries all the mass.
  bool is_point() const { return support_.size() == 1; }

  friend bool operator==(const DoorDist&, const DoorDist&) = default;

 private:
  friend DoorDist make_uniform(int n);
  friend DoorDist make_point(int n, Door door);
  friend DoorDist validate_dist(std::span<const Rational> mass);
  friend DoorDist make_uniform_over(int n, std::span<const Door> doors);

  DoorDist(int n, std::vector<Entry> support) : n_doors_(n), support_(std::move(support)) {}

  int n_doors_ = 0;
  std::vector<Entry> support_;
};

// Every door equally likely. Throws invalid-door-count for n < 3.
DoorDist make_uniform(int n);

// All mass on one door. Throws invalid-door-count / invalid-door-index.
DoorDist make_point(int n, Door door);

// Checks nonnegativity and exact normalization of a dense mass vector.
DoorDist validate_dist(std::span<const Rational> mass);

// Uniform over a nonempty set of distinct doors.
DoorDist make_uniform_over(int n, std::span<const Door> doors);

void check_door_count(int n);
void check_door_index(int n, Door door);

}  // namespace monty
