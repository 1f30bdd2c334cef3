#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monty/rational.hpp"

namespace monty {

// Dense payoff matrix of a two-person zero-sum game. The row player
// maximizes, the column player minimizes.
class PayoffMatrix {
 public:
  PayoffMatrix(std::size_t rows, std::size_t cols);
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Rational row_sum(std::size_t r) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct MixedSolution {
  Rational value;
  std::vector<Rational> row_mix;
  std::vector<Rational> col_mix;
};

struct LpSolution {
  MixedSolution solution;
  // Optimal objectives of the column player's LP and of its dual, on the
  // shifted matrix. Strong duality makes them equal.
  Rational primal_objective;
  Rational dual_objective;
  int pivots = 0;
};

// Exact tableau simplex with Bland's rule on
//   max sum(y)  s.t.  (A + shift) y <= 1,  y >= 0
// where shift makes every entry positive. Row strategies come from the dual
// prices of the slack columns.
LpSolution solve_lp_detailed(const PayoffMatrix& game);
MixedSolution solve_lp(const PayoffMatrix& game);

// Expected payoff of every row pure strategy against a column mixture.
std::vector<Rational> row_payoffs(const PayoffMatrix& game, std::span<const Rational> col_mix);
// Expected payoff of a row mixture against every column pure strategy.
std::vector<Rational> col_payoffs(const PayoffMatrix& game, std::span<const Rational> row_mix);

Rational expected_payoff(const PayoffMatrix& game, std::span<const Rational> row_mix,
                         std::span<const Rational> col_mix);

// Exact certificate: row_mix guarantees >= value against every column and
// col_mix holds every row to <= value. Also requires both mixtures to be
// distributions. Throws dimension-mismatch on size errors.
bool verify_saddle(const PayoffMatrix& game, const MixedSolution& sol);

// Throws negative-probability / not-normalized / dimension-mismatch.
void validate_mixture(std::span<const Rational> mix, std::size_t expected_size);

}  // namespace monty
