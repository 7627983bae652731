#ifndef COADJ_LINALG_HPP_
#define COADJ_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coadj/rational.hpp"

namespace coadj {

// Dense rational matrix, row major. Small sizes only (rank of a group).
using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Solve A x = b by Gaussian elimination. A is n_rows x n_cols, b has
// n_rows entries. Returns nullopt if the system is inconsistent; if the
// solution is underdetermined, free variables are set to 0.
inline std::optional<std::vector<Rat>> solve_linear(RatMatrix a,
                                                    std::vector<Rat> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

// Strict feasibility of { x : strict[i] . x > 0, loose[j] . x >= 0 } by
// Fourier-Motzkin elimination. Dimensions here are tiny (group rank), the
// constraint counts are bounded by the number of roots.
inline bool cone_feasible(std::vector<std::vector<Rat>> strict,
                          std::vector<std::vector<Rat>> loose) {
  std::size_t dim = 0;
  for (const auto& v : strict) dim = std::max(dim, v.size());
  for (const auto& v : loose) dim = std::max(dim, v.size());

  // Constraint = (coeffs, is_strict). Eliminate variables one by one.
  struct Cons {
    std::vector<Rat> c;
    bool strict;
  };
  std::vector<Cons> cs;
  cs.reserve(strict.size() + loose.size());
  for (auto& v : strict) {
    v.resize(dim, Rat(0));
    cs.push_back({std::move(v), true});
  }
  for (auto& v : loose) {
    v.resize(dim, Rat(0));
    cs.push_back({std::move(v), false});
  }

  for (std::size_t var = dim; var-- > 0;) {
    std::vector<Cons> pos, neg, zero;
    for (auto& k : cs) {
      const Rat& a = k.c[var];
      if (a > 0)
        pos.push_back(std::move(k));
      else if (a < 0)
        neg.push_back(std::move(k));
      else
        zero.push_back(std::move(k));
    }
    std::vector<Cons> next = std::move(zero);
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // p.c . x > 0 and n.c . x > 0; combine to eliminate var:
        // (-n.c[var]) * p.c + p.c[var] * n.c has zero var coefficient.
        Cons k;
        k.strict = p.strict && n.strict;
        k.c.assign(dim, Rat(0));
        Rat fp = -n.c[var];
        Rat fn = p.c[var];
        bool nonzero = false;
        for (std::size_t j = 0; j < var; ++j) {
          k.c[j] = fp * p.c[j] + fn * n.c[j];
          if (k.c[j] != 0) nonzero = true;
        }
        if (!nonzero) {
          if (k.strict) return false;  // 0 > 0
          continue;
        }
        next.push_back(std::move(k));
      }
    }
    // A strict constraint with no combinable partner is satisfiable by
    // taking var large (pos) or very negative (neg); drop them.
    cs = std::move(next);
    // Remove constraints that no longer involve the remaining variables.
    std::vector<Cons> kept;
    for (auto& k : cs) {
      bool involved = false;
      for (std::size_t j = 0; j < var; ++j)
        if (k.c[j] != 0) { involved = true; break; }
      if (involved) {
        kept.push_back(std::move(k));
      } else if (k.strict) {
        return false;  // reduced to 0 > 0
      }
    }
    cs = std::move(kept);
  }
  return true;
}

}  // namespace coadj

#endif  // COADJ_LINALG_HPP_
