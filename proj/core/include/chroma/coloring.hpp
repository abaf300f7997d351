#pragma once

#include <vector>

namespace chroma {

/// Total assignment of colour indices to the vertices 0..n-1.
struct Coloring {
  std::vector<int> colours;

  int size() const { return static_cast<int>(colours.size()); }
  int operator[](int v) const { return colours[v]; }

  /// Number of distinct colour values used.
  int distinct() const;
};

}  // namespace chroma
