#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// elimination code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

// Bareiss fraction-free determinant; every intermediate is a minor.
inline std::int64_t det(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<std::int64_t>(v / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
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
}

// gcd of all k x k minors (0 if all vanish).
inline std::int64_t determinantal_divisor(const Dense& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(rows, k, rs);
  subsets(cols, k, cs);
  std::int64_t g = 0;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Dense sub(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      g = std::gcd(g, std::llabs(det(sub)));
      if (g == 1) return 1;
    }
  }
  return g;
}

// Invariant factors d_k = D_k / D_{k-1} from determinantal divisors.
inline std::vector<std::int64_t> smith_by_minors(const Dense& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const std::int64_t dk = determinantal_divisor(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Textbook dense SNF: move the smallest entry to the corner, reduce its row
// and column, repeat; fix divisibility by adding rows.
inline std::vector<std::int64_t> smith_textbook(Dense a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool again = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        const std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        again |= a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        again |= a[t][j] != 0;
      }
      if (again) continue;
      for (std::size_t i = t + 1; i < m && !again; ++i)
        for (std::size_t j = t + 1; j < n && !again; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            again = true;
          }
      if (!again) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

// Closure of {a} under x -> x*b and x -> x*bar b, by breadth-first search.
template <class Op>
std::vector<std::set<std::size_t>> orbits_bruteforce(std::size_t n, Op op) {
  std::vector<std::set<std::size_t>> out;
  std::vector<bool> done(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::set<std::size_t> orbit{s};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x : std::vector<std::size_t>(orbit.begin(), orbit.end())) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t y = 0; y < n; ++y) {
            // y*b == x means y = x *bar b
            if ((op(x, b) == y || op(y, b) == x) && orbit.insert(y).second) grew = true;
          }
        }
      }
    }
    for (std::size_t x : orbit) done[x] = true;
    out.push_back(orbit);
  }
  return out;
}

}  // namespace oracle
