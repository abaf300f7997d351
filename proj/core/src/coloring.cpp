#include "chroma/coloring.hpp"

#include <algorithm>

namespace chroma {

int Coloring::distinct() const {
  std::vector<int> sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<int>(sorted.size());
}

}  // namespace chroma
