#include "hmw/matrix10.hpp"

namespace hmw {

int exact_rank(ExactMatrix10 m) {
  constexpr int n = ExactMatrix10::kDim;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < n; ++c) std::swap(m(rank, c), m(pivot, c));
    }
    ExactComplex inv = m(rank, col).inverse();
    for (int r = rank + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      ExactComplex f = m(r, col) * inv;
      for (int c = col; c < n; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::array<std::array<std::string, 10>, 10> to_string_grid(const ExactMatrix10& m) {
  std::array<std::array<std::string, 10>, 10> g;
  for (int r = 0; r < ExactMatrix10::kDim; ++r) {
    for (int c = 0; c < ExactMatrix10::kDim; ++c) g[r][c] = m(r, c).to_string();
  }
  return g;
}

}  // namespace hmw
