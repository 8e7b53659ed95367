#pragma once

// Independent reference computations used by the tests. Deliberately naive.

#include "nilab/matrix.hpp"

namespace oracle {

using nilab::Mat;
using nilab::Rat;

inline Rat cofactor_det(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0)
      continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c)
          minor(r - 1, kk++) = m(r, k);
    const Rat term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rat(-term);
  }
  return total;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t best = 0;
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    bool found = false;
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        Mat sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            sub(a, b) = m(rs[a], cs[b]);
        if (cofactor_det(sub) != 0) {
          found = true;
          break;
        }
      }
      if (found)
        break;
    }
    if (!found)
      break;
    best = k;
  }
  return best;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

inline Mat diag(std::initializer_list<long> d) {
  Mat m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace oracle
