#include <cstdlib>
#include <string>

#include "braidscope/errors.hpp"

namespace braidscope {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("BRAIDSCOPE_MAX_CELLS"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(raw, &used);
      if (used == std::string(raw).size() && value > 0) limits.max_cells = value;
    } catch (const std::exception&) {
      // Malformed overrides fall back to the default cap.
    }
  }
  return limits;
}

}  // namespace braidscope
