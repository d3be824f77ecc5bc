#include "uqgln/util.hpp"

#include <iostream>
#include <mutex>

#include "uqgln/rng.hpp"

namespace uqgln {

void log_note(const std::string& line) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[uqgln] " << line << "\n";
}

std::uint64_t derive_seed(std::uint64_t base, const char* purpose, std::uint64_t index) {
  std::uint64_t h = fnv1a64(purpose);
  h ^= base + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= index * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull;
  SplitMix64 mix(h);
  return mix.next();
}

}  // namespace uqgln
