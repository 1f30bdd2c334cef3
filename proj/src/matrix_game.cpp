#include "monty/matrix_game.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "monty/error.hpp"

namespace monty {

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw Error(Errc::kDimensionMismatch, "payoff data does not fill the matrix");
}

Rational PayoffMatrix::row_sum(std::size_t r) const {
  Rational total;
  for (std::size_t c = 0; c < cols_; ++c) total += at(r, c);
  return total;
}

namespace {

// Row-major tableau: one row per constraint plus the reduced-cost row, one
// column per variable plus the right-hand side.
class Tableau {
 public:
  Tableau(const PayoffMatrix& game, const Rational& shift)
      : m_(game.rows()), k_(game.cols()), width_(k_ + m_ + 1), cells_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) cell(i, j) = game.at(i, j) + shift;
      cell(i, k_ + i) = Rational(1);
      cell(i, rhs()) = Rational(1);
      basis_[i] = k_ + i;
    }
    for (std::size_t j = 0; j < k_; ++j) cell(m_, j) = Rational(1);
  }

  // Returns the number of pivots.
  int run() {
    int pivots = 0;
    while (auto entering = choose_entering()) {
      const std::size_t leaving = choose_leaving(*entering);
      pivot(leaving, *entering);
      ++pivots;
    }
    return pivots;
  }

  Rational objective() const { return -cell(m_, rhs()); }

  std::vector<Rational> primal() const {
    std::vector<Rational> y(k_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) y[basis_[i]] = cell(i, rhs());
    }
    return y;
  }

  std::vector<Rational> dual() const {
    std::vector<Rational> u(m_);
    for (std::size_t i = 0; i < m_; ++i) u[i] = -cell(m_, k_ + i);
    return u;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }
  Rational& cell(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rational& cell(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  // Bland: lowest-index column with positive reduced cost.
  std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      if (cell(m_, j).sign() > 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio; ties go to the lowest-index basic variable.
  std::size_t choose_leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      if (cell(i, col).sign() <= 0) continue;
      Rational ratio = cell(i, rhs()) / cell(i, col);
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!best) throw Error(Errc::kInvalidConfig, "linear program is unbounded");
    return *best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = cell(row, col);
    for (std::size_t j = 0; j < width_; ++j) cell(row, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Rational factor = cell(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!cell(row, j).is_zero()) cell(i, j) -= factor * cell(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t k_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp_detailed(const PayoffMatrix& game) {
  if (game.rows() == 0 || game.cols() == 0) throw Error(Errc::kDimensionMismatch, "empty payoff matrix");
  Rational lowest = game.at(0, 0);
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) lowest = std::min(lowest, game.at(i, j));
  }
  const Rational shift = Rational(1) - lowest;

  Tableau tableau(game, shift);
  LpSolution out;
  out.pivots = tableau.run();

  std::vector<Rational> y = tableau.primal();
  std::vector<Rational> u = tableau.dual();
  out.primal_objective = tableau.objective();
  for (const Rational& ui : u) out.dual_objective += ui;

  const Rational& z = out.primal_objective;
  for (Rational& v : y) v /= z;
  for (Rational& v : u) v /= z;
  out.solution = MixedSolution{Rational(1) / z - shift, std::move(u), std::move(y)};
  return out;
}

MixedSolution solve_lp(const PayoffMatrix& game) { return solve_lp_detailed(game).solution; }

std::vector<Rational> row_payoffs(const PayoffMatrix& game, std::span<const Rational> col_mix) {
  if (col_mix.size() != game.cols()) throw Error(Errc::kDimensionMismatch, "column mixture size");
  std::vector<Rational> out(game.rows());
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (!col_mix[j].is_zero()) out[i] += game.at(i, j) * col_mix[j];
    }
  }
  return out;
}

std::vector<Rational> col_payoffs(const PayoffMatrix& game, std::span<const Rational> row_mix) {
  if (row_mix.size() != game.rows()) throw Error(Errc::kDimensionMismatch, "row mixture size");
  std::vector<Rational> out(game.cols());
  for (std::size_t i = 0; i < game.rows(); ++i) {
    if (row_mix[i].is_zero()) continue;
    for (std::size_t j = 0; j < game.cols(); ++j) out[j] += game.at(i, j) * row_mix[i];
  }
  return out;
}

Rational expected_payoff(const PayoffMatrix& game, std::span<const Rational> row_mix,
                         std::span<const Rational> col_mix) {
  const auto per_row = row_payoffs(game, col_mix);
  if (row_mix.size() != game.rows()) throw Error(Errc::kDimensionMismatch, "row mixture size");
  Rational total;
  for (std::size_t i = 0; i < per_row.size(); ++i) total += row_mix[i] * per_row[i];
  return total;
}

void validate_mixture(std::span<const Rational> mix, std::size_t expected_size) {
  if (mix.size() != expected_size) {
    throw Error(Errc::kDimensionMismatch,
                "mixture has " + std::to_string(mix.size()) + " weights, expected " + std::to_string(expected_size));
  }
  Rational total;
  for (const Rational& w : mix) {
    if (w.sign() < 0) throw Error(Errc::kNegativeProbability, "mixture weight " + w.to_string());
    total += w;
  }
  if (total != Rational(1)) throw Error(Errc::kNotNormalized, "mixture sums to " + total.to_string());
}

bool verify_saddle(const PayoffMatrix& game, const MixedSolution& sol) {
  if (sol.row_mix.size() != game.rows() || sol.col_mix.size() != game.cols()) {
    throw Error(Errc::kDimensionMismatch, "solution does not match the payoff matrix");
  }
  try {
    validate_mixture(sol.row_mix, game.rows());
    validate_mixture(sol.col_mix, game.cols());
  } catch (const Error&) {
    return false;
  }
  const auto guaranteed = col_payoffs(game, sol.row_mix);
  const auto conceded = row_payoffs(game, sol.col_mix);
  return std::all_of(guaranteed.begin(), guaranteed.end(), [&](const Rational& v) { return v >= sol.value; }) &&
         std::all_of(conceded.begin(), conceded.end(), [&](const Rational& v) { return v <= sol.value; });
}

}  // namespace monty
