#pragma once

// Data-parallel inner loops of the Monte Carlo engine.
//
// Each kernel has a scalar reference in `scalar::` and, on x86-64, an AVX2
// variant in `avx2::`. The unqualified entry points dispatch at runtime to
// the active instruction set. All variants must produce identical output.

#include <cstdint>
#include <span>
#include <string_view>

namespace monty::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best variant this CPU and build support.
Isa detected_isa();

// Variant used by the dispatching entry points. Defaults to detected_isa(),
// or to the MONTY_SIMD environment variable ("scalar" / "avx2") when set.
Isa active_isa();

// Throws std::invalid_argument if the CPU or build lacks the variant.
void set_active_isa(Isa isa);
bool isa_supported(Isa isa);

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Output number `counter` (0-based) of a SplitMix64 generator seeded with
// `seed`: the state after counter + 1 increments, passed through the mixer.
constexpr std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Number of thresholds <= u. With nondecreasing thresholds this is the
// index of the first bucket whose upper threshold exceeds u.
inline std::uint32_t categorical_one(std::span<const std::uint64_t> thresholds, std::uint64_t u) {
  std::uint32_t idx = 0;
  for (std::uint64_t t : thresholds) idx += (t <= u);
  return idx;
}

// out[k] = counter_draw(seed, first + k * stride)
void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out);

// out[k] = categorical_one(thresholds, draws[k]); draws and out have equal length.
void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out);

namespace scalar {
void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out);
void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MONTY_HAVE_AVX2_KERNELS 1
namespace avx2 {
void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out);
void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out);
}  // namespace avx2
#endif

}  // namespace monty::kernels
