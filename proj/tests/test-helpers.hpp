#pragma once

#include <random>

#include "monocat/matrix.hpp"

namespace monocat::testing {

  inline Matrix random_matrix(std::mt19937&  rng,
                              std::size_t    rows,
                              std::size_t    cols,
                              Characteristic p) {
    Matrix m(rows, cols, p);
    long const range = p == 0 ? 7 : static_cast<long>(p);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        long v = static_cast<long>(rng() % range);
        if (p == 0) {
          v -= 3;
        }
        m(i, j) = Scalar(v, p);
      }
    }
    return m;
  }

}  // namespace monocat::testing
