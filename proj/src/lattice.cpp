#include "nspec/lattice.hpp"

#include <numeric>
#include <utility>

namespace nspec::lattice {

Matrix to_matrix(const std::vector<Point>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    Vector v;
    v.reserve(r.size());
    for (auto x : r) v.emplace_back(static_cast<long>(x));
    m.push_back(std::move(v));
  }
  return m;
}

Integer determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Integer a = m[r][c];
      Integer b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
      Integer g = content(m[i]);
      if (g > 1) {
        for (auto& x : m[i]) x /= g;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<Integer> smith_invariants(Matrix m) {
  std::vector<Integer> result;
  if (m.empty()) return result;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Find a nonzero pivot of minimal absolute value in the trailing block.
    bool done = false;
    while (!done) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return result;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        }
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        }
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      done = divides;
    }
    result.push_back(abs(m[t][t]));
  }
  return result;
}

Integer determinantal_divisor(const Matrix& m) {
  Integer prod = 1;
  for (const auto& d : smith_invariants(m)) prod *= d;
  return prod;
}

Vector orthogonal_complement(const Matrix& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = n + 1;
  Vector normal(cols);
  for (std::size_t skip = 0; skip < cols; ++skip) {
    Matrix minor(n, Vector());
    for (std::size_t i = 0; i < n; ++i) {
      minor[i].reserve(n);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != skip) minor[i].push_back(rows[i][j]);
      }
    }
    Integer d = determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

Integer content(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer dot(const Vector& a, const Vector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t gcd_of(const Point& p) {
  std::int64_t g = 0;
  for (auto x : p) g = std::gcd(g, x);
  return g;
}

}  // namespace nspec::lattice
