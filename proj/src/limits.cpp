#include "dfca/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace dfca {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("DFCA_MAX_ATOMS")) {
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc() && ptr == end && value > 0) {
      limits.max_atoms = value;
      limits.max_kb_size = value;
    }
  }
  return limits;
}

}  // namespace dfca
