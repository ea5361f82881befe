#pragma once

#include <cstddef>

namespace hekdv {

/// Approximate footprint of one stored polynomial term (monomial, coefficient
/// limbs and container overhead), used to turn term counts into bytes.
inline constexpr std::size_t kBytesPerTerm = 128;

/// Default cap when neither set_memory_cap_mb nor HEKDV_MEM_CAP_MB is given.
inline constexpr std::size_t kDefaultMemoryCapMb = 4096;

/// Current cap in bytes. On first use the value of the environment variable
/// HEKDV_MEM_CAP_MB is honoured if present.
std::size_t memory_cap_bytes();

void set_memory_cap_mb(std::size_t megabytes);

/// Throws ResourceLimit if a polynomial with `terms` terms would exceed the cap.
void check_term_budget(std::size_t terms);

}  // namespace hekdv
