#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace uqgln {

/// FNV-1a over bytes; used for short input fingerprints in reports.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

/// Writes one line to stderr. Stdout is reserved for the JSON report.
void log_note(const std::string& line);

}  // namespace uqgln
