#include "densedel/size_cap.h"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace densedel {

int size_cap(int default_cap) {
  if (const char* env = std::getenv("DD_SIZE_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return std::min(v, kAbsoluteSizeCap);
    } catch (const std::exception&) {
      // Malformed values fall back to the default.
    }
  }
  return default_cap;
}

}  // namespace densedel
