#include "thurston/parallel.hpp"

#include <cstdlib>
#include <string>

namespace thurston {

std::size_t worker_count() {
  if (const char* env = std::getenv("THURSTON_OBSTRUCT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace thurston
