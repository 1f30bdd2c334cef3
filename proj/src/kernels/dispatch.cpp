#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "monty/kernels.hpp"

namespace monty::kernels {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("MONTY_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#ifdef MONTY_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
  active().store(isa, std::memory_order_relaxed);
}

void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out) {
#ifdef MONTY_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::counter_draws(seed, first, stride, out);
#endif
  scalar::counter_draws(seed, first, stride, out);
}

void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out) {
#ifdef MONTY_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::categorical(thresholds, draws, out);
#endif
  scalar::categorical(thresholds, draws, out);
}

}  // namespace monty::kernels
