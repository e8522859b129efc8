#pragma once

#include <random>

#include "posetsys/blockmat.hpp"
#include "posetsys/poset.hpp"

namespace posetsys {

// Member of the incidence space with integer entries uniform in [lo, hi].
// Each admissible entry is drawn independently; it is kept with probability
// `density` and zeroed otherwise.
inline QBlockMatrix random_incidence(const Poset& poset, const Partition& rows,
                                     const Partition& cols, int lo, int hi,
                                     std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution keep(density);
  QMatrix m = QMatrix::Zero(rows.total(), cols.total());
  for (int i = 1; i <= poset.size(); ++i) {
    for (int j = 1; j <= poset.size(); ++j) {
      if (!poset.geq(j, i)) continue;
      for (Index a = 0; a < rows.size(i); ++a) {
        for (Index b = 0; b < cols.size(j); ++b) {
          const int v = value(rng);
          if (keep(rng)) m(rows.offset(i) + a, cols.offset(j) + b) = v;
        }
      }
    }
  }
  return QBlockMatrix(std::move(m), rows, cols);
}

}  // namespace posetsys
