#include "monty/kernels.hpp"

namespace monty::kernels::scalar {

void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out) {
  std::uint64_t counter = first;
  for (auto& u : out) {
    u = counter_draw(seed, counter);
    counter += stride;
  }
}

void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out) {
  for (std::size_t k = 0; k < draws.size(); ++k) out[k] = categorical_one(thresholds, draws[k]);
}

}  // namespace monty::kernels::scalar
