#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace e6::lp {

// Arbitrary precision here: pivoting on a few hundred rows can outgrow int64
// denominators even when the data is small.
using BigRational = boost::multiprecision::cpp_rational;

/// Maximizes c.x subject to A x <= b, x >= 0, where b >= 0 so the origin is a
/// feasible vertex. Dense tableau simplex with Bland's rule; throws on an
/// unbounded objective.
inline BigRational maximize(const std::vector<std::vector<BigRational>>& a, const std::vector<BigRational>& b,
                            const std::vector<BigRational>& c) {
  const std::size_t m = a.size(), n = c.size();
  for (const auto& bi : b)
    if (bi < 0) throw std::invalid_argument("lp::maximize: origin must be feasible");
  const std::size_t cols = n + m;
  std::vector<std::vector<BigRational>> t(m, std::vector<BigRational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lp::maximize: ragged constraint matrix");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs; the objective value sits in z[cols] with flipped sign.
  std::vector<BigRational> z(cols + 1);
  for (std::size_t j = 0; j < n; ++j) z[j] = c[j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (z[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) return -z[cols];

    std::size_t leave = m;
    BigRational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      BigRational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::runtime_error("lp::maximize: unbounded");

    const BigRational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const BigRational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const BigRational f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace e6::lp
