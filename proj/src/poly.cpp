#include "retractkit/poly.hpp"

#include <cstdlib>
#include <string>

namespace retractkit {

std::size_t max_terms() {
  constexpr std::size_t kDefault = 200000;
  const char* raw = std::getenv("RETRACTKIT_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return kDefault;
  try {
    const unsigned long long value = std::stoull(raw);
    return value == 0 ? kDefault : static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace retractkit
