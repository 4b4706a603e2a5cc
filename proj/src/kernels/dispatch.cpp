#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tinysample/kernels.hpp"

namespace tinysample::kernels {

namespace {

struct Table {
  Isa isa;
  IntersectCountFn intersect_count;
  GatherSumFn gather_sum;
};

Table table_for(Isa isa) {
#if defined(TINYSAMPLE_WITH_AVX2)
  if (isa == Isa::avx2) return {Isa::avx2, avx2::intersect_count, avx2::gather_sum};
#endif
  (void)isa;
  return {Isa::scalar, scalar::intersect_count, scalar::gather_sum};
}

Isa detect() {
  if (const char* env = std::getenv("TINYSAMPLE_ISA"); env && std::string(env) == "scalar") {
    return Isa::scalar;
  }
  return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Table& active() {
  static Table t = table_for(detect());
  return t;
}

}  // namespace

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(TINYSAMPLE_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active().isa; }

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

void select_isa(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::runtime_error("ISA " + std::string(isa_name(isa)) + " not available");
  }
  active() = table_for(isa);
}

std::uint64_t intersect_count(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b) {
  return active().intersect_count(a, b);
}

std::uint64_t gather_sum(std::span<const std::uint32_t> table,
                         std::span<const std::uint32_t> idx) {
  return active().gather_sum(table, idx);
}

}  // namespace tinysample::kernels
