#include "hekdv/memcap.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "hekdv/errors.hpp"

namespace hekdv {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("HEKDV_MEM_CAP_MB")) {
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return kDefaultMemoryCapMb << 20;
}

std::atomic<std::size_t>& cap() {
  static std::atomic<std::size_t> value{initial_cap()};
  return value;
}

}  // namespace

std::size_t memory_cap_bytes() { return cap().load(std::memory_order_relaxed); }

void set_memory_cap_mb(std::size_t megabytes) {
  if (megabytes == 0) throw ConfigError("memory cap must be positive");
  cap().store(megabytes << 20, std::memory_order_relaxed);
}

void check_term_budget(std::size_t terms) {
  if (terms * kBytesPerTerm > memory_cap_bytes())
    throw ResourceLimit("symbolic expansion exceeds memory cap (" + std::to_string(terms) +
                        " terms, cap " + std::to_string(memory_cap_bytes() >> 20) +
                        " MB; raise HEKDV_MEM_CAP_MB)");
}

}  // namespace hekdv
