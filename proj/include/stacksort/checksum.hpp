#ifndef STACKSORT_CHECKSUM_HPP
#define STACKSORT_CHECKSUM_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace stacksort {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<size_t>(k)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace stacksort

#endif
