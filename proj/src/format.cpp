#include "ssz/format.hpp"

#include <cmath>
#include <cstdio>

namespace ssz {

std::string format_value(double v) {
  char buf[48];
  if (v == 0.0) return "0";
  if (std::abs(v) < 1e-3) {
    std::snprintf(buf, sizeof(buf), "%.9e", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.10g", v);
  }
  return buf;
}

std::string format_index(double n) {
  if (n == std::floor(n) && std::abs(n) < 1.8e19) {
    char buf[32];
    if (n >= 0) {
      std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(n));
    } else {
      std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(n));
    }
    return buf;
  }
  return format_value(n);
}

}  // namespace ssz
