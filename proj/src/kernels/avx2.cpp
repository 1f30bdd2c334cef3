// Compiled with -mavx2; only reached through runtime dispatch.
#include <immintrin.h>

#include "monty/kernels.hpp"

namespace monty::kernels::avx2 {

namespace {

// Low 64 bits of a * b per lane, built from 32-bit partial products.
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix(__m256i z) {
  const __m256i m1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
  const __m256i m2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), m1);
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), m2);
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

}  // namespace

void counter_draws(std::uint64_t seed, std::uint64_t first, std::uint64_t stride, std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  std::size_t k = 0;
  if (n >= 4) {
    // State for lane l is seed + (first + 1 + l * stride) * golden; wraps mod 2^64.
    const std::uint64_t step = stride * kGolden;
    const std::uint64_t base = seed + (first + 1) * kGolden;
    __m256i state = _mm256_set_epi64x(static_cast<long long>(base + 3 * step), static_cast<long long>(base + 2 * step),
                                      static_cast<long long>(base + step), static_cast<long long>(base));
    const __m256i advance = _mm256_set1_epi64x(static_cast<long long>(4 * step));
    for (; k + 4 <= n; k += 4) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), mix(state));
      state = _mm256_add_epi64(state, advance);
    }
  }
  for (; k < n; ++k) out[k] = counter_draw(seed, first + k * stride);
}

void categorical(std::span<const std::uint64_t> thresholds, std::span<const std::uint64_t> draws,
                 std::span<std::uint32_t> out) {
  const std::size_t n = draws.size();
  // Unsigned compare via the signed one after flipping the sign bit.
  const __m256i flip = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  const auto count = static_cast<long long>(thresholds.size());
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i u = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(draws.data() + k)), flip);
    __m256i above = _mm256_setzero_si256();  // lanes count thresholds > u, as -1 per hit
    for (std::uint64_t t : thresholds) {
      const __m256i tv = _mm256_xor_si256(_mm256_set1_epi64x(static_cast<long long>(t)), flip);
      above = _mm256_add_epi64(above, _mm256_cmpgt_epi64(tv, u));
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), above);
    for (int l = 0; l < 4; ++l) out[k + l] = static_cast<std::uint32_t>(count + lanes[l]);
  }
  for (; k < n; ++k) out[k] = categorical_one(thresholds, draws[k]);
}

}  // namespace monty::kernels::avx2
