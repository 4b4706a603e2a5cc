#pragma once

// Integer inner loops of the metric suite. Each kernel has a scalar reference
// and, where the target supports it, an AVX2 variant picked once at startup.
// All variants return bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>

namespace tinysample::kernels {

enum class Isa { scalar, avx2 };

// |a ∩ b| for strictly increasing sequences.
using IntersectCountFn = std::uint64_t (*)(std::span<const std::uint32_t> a,
                                           std::span<const std::uint32_t> b);
// sum of table[i] for i in idx; every index must be < table.size().
using GatherSumFn = std::uint64_t (*)(std::span<const std::uint32_t> table,
                                      std::span<const std::uint32_t> idx);

namespace scalar {
std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b);
std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx);
}  // namespace scalar

#if defined(TINYSAMPLE_WITH_AVX2)
namespace avx2 {
std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b);
std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx);
}  // namespace avx2
#endif

bool cpu_supports(Isa isa);

// Best supported ISA, unless TINYSAMPLE_ISA=scalar is set in the environment.
Isa active_isa();
std::string_view isa_name(Isa isa);

// Switches the dispatched variants; throws std::runtime_error if the CPU or
// build lacks `isa`. Not thread-safe; meant for tests and tools.
void select_isa(Isa isa);

std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b);
std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx);

}  // namespace tinysample::kernels
