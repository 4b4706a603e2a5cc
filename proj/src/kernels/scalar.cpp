#include "tinysample/kernels.hpp"

namespace tinysample::kernels::scalar {

std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0;
  std::uint64_t count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx) {
  std::uint64_t sum = 0;
  for (std::uint32_t i : idx) sum += table[i];
  return sum;
}

}  // namespace tinysample::kernels::scalar
