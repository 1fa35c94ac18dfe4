#include "ricciforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ricciforge {

std::size_t worker_count() {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RICCIFORGE_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return static_cast<std::size_t>(requested);
    } catch (const std::exception&) {
      // unparsable value: fall through to the hardware default
    }
  }
  return hw;
}

}  // namespace ricciforge
