#include <immintrin.h>

#include <climits>

#include "tinysample/kernels.hpp"

namespace tinysample::kernels::avx2 {

// Block-wise merge over 8-lane blocks: each block of `a` is compared against
// all 8 rotations of the current block of `b`, then the block with the smaller
// maximum advances. Any two blocks whose value ranges overlap are current at
// the same time exactly once, so every match is counted once.
std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0;
  std::uint64_t count = 0;
  const std::size_t a_blocks = a.size() & ~std::size_t{7};
  const std::size_t b_blocks = b.size() & ~std::size_t{7};
  const __m256i rotate = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);

  while (i < a_blocks && j < b_blocks) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
    __m256i hit = _mm256_cmpeq_epi32(va, vb);
    for (int r = 1; r < 8; ++r) {
      vb = _mm256_permutevar8x32_epi32(vb, rotate);
      hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, vb));
    }
    count += static_cast<std::uint64_t>(
        _mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)))));
    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  return count + scalar::intersect_count(a.subspan(i), b.subspan(j));
}

std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx) {
  // vpgatherdd takes signed 32-bit indices.
  if (table.size() > static_cast<std::size_t>(INT_MAX)) {
    return scalar::gather_sum(table, idx);
  }
  const auto* base = reinterpret_cast<const int*>(table.data());
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= idx.size(); k += 8) {
    const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx.data() + k));
    const __m256i v = _mm256_i32gather_epi32(base, vi, 4);
    acc_lo = _mm256_add_epi64(acc_lo, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
    acc_hi = _mm256_add_epi64(acc_hi, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc_lo, acc_hi));
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  return sum + scalar::gather_sum(table, idx.subspan(k));
}

}  // namespace tinysample::kernels::avx2
