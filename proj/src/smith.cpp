#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhom/intlinalg.hpp"

namespace qhom {

namespace {

// Checked 64-bit arithmetic; any overflow aborts the run with OverflowError.
struct Checked64 {
  using T = std::int64_t;
  static T from(std::int64_t v) { return v; }
  static bool is_zero(T a) { return a == 0; }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
  }
  static T neg(T a) {
    if (a == INT64_MIN) throw OverflowError();
    return -a;
  }
  static T abs(T a) { return a < 0 ? neg(a) : a; }
  static T div_trunc(T a, T d) {
    if (a == INT64_MIN && d == -1) throw OverflowError();
    return a / d;
  }
  static bool divides(T d, T a) { return d == -1 || a % d == 0; }
  static bool abs_less(T a, T b) { return abs(a) < abs(b); }
  static bool is_unit(T a) { return a == 1 || a == -1; }
  // g = s*a + t*b with g = gcd(a, b) > 0
  static T gcdext(T a, T b, T& s, T& t) {
    T old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (r != 0) {
      const T q = div_trunc(old_r, r);
      T tmp = sub(old_r, mul(q, r));
      old_r = r;
      r = tmp;
      tmp = sub(old_s, mul(q, cur_s));
      old_s = cur_s;
      cur_s = tmp;
      tmp = sub(old_t, mul(q, cur_t));
      old_t = cur_t;
      cur_t = tmp;
    }
    if (old_r < 0) {
      old_r = neg(old_r);
      old_s = neg(old_s);
      old_t = neg(old_t);
    }
    s = old_s;
    t = old_t;
    return old_r;
  }
  static std::int64_t to_i64(T a) { return a; }
};

struct Bignum {
  using T = mpz_class;
  static T from(std::int64_t v) { return T(static_cast<long>(v)); }
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static int sign(const T& a) { return sgn(a); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T neg(const T& a) { return -a; }
  static T abs(const T& a) { return ::abs(a); }
  static T div_trunc(const T& a, const T& d) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  static bool divides(const T& d, const T& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
  static bool abs_less(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static bool is_unit(const T& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
  static T gcdext(const T& a, const T& b, T& s, T& t) {
    T g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static std::int64_t to_i64(const T& a) {
    if (!a.fits_slong_p()) throw Error(ErrorKind::Overflow, "invariant factor exceeds 64 bits");
    return a.get_si();
  }
};

class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  void check() {
    if (seconds_ <= 0.0 || (++calls_ & 255u) != 0) return;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > seconds_) {
      throw Error(ErrorKind::ResourceLimit, "integer elimination exceeded its time budget");
    }
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
  unsigned calls_ = 0;
};

template <class N>
using Col = std::vector<std::pair<std::uint32_t, typename N::T>>;

// a*v + b*w, merged by row with zeros dropped.
template <class N>
Col<N> combine(const typename N::T& a, const Col<N>& v, const typename N::T& b, const Col<N>& w) {
  Col<N> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  const bool a_one = a == 1;
  const bool a_zero = N::is_zero(a);
  const bool b_zero = N::is_zero(b);
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      if (!a_zero) out.emplace_back(v[i].first, a_one ? v[i].second : N::mul(a, v[i].second));
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      if (!b_zero) out.emplace_back(w[j].first, N::mul(b, w[j].second));
      ++j;
    } else {
      auto val = N::add(a_one ? v[i].second : N::mul(a, v[i].second), N::mul(b, w[j].second));
      if (!N::is_zero(val)) out.emplace_back(v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class N>
Col<N> load_column(const SparseIntMatrix& m, std::size_t c) {
  Col<N> v;
  auto [b, e] = m.column(c);
  v.reserve(static_cast<std::size_t>(e - b));
  for (auto it = b; it != e; ++it) v.emplace_back(it->row, N::from(it->value));
  return v;
}

// Lattice basis of the column span in echelon form: basis[k] has its last
// (highest-row) entry at a row owned by no other basis column.
template <class N>
struct Echelon {
  std::vector<std::int32_t> pivot_of;
  std::vector<Col<N>> basis;
};

template <class N>
Echelon<N> build_echelon(const SparseIntMatrix& m, Deadline& deadline) {
  using T = typename N::T;
  Echelon<N> ech;
  ech.pivot_of.assign(m.rows(), -1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Col<N> v = load_column<N>(m, c);
    while (!v.empty()) {
      deadline.check();
      const std::uint32_t r = v.back().first;
      const std::int32_t k = ech.pivot_of[r];
      if (k < 0) {
        if (N::sign(v.back().second) < 0) {
          for (auto& e : v) e.second = N::neg(e.second);
        }
        ech.pivot_of[r] = static_cast<std::int32_t>(ech.basis.size());
        ech.basis.push_back(std::move(v));
        break;
      }
      Col<N>& piv = ech.basis[static_cast<std::size_t>(k)];
      const T p = piv.back().second;
      const T a = v.back().second;
      if (N::divides(p, a)) {
        v = combine<N>(T(1), v, N::neg(N::div_trunc(a, p)), piv);
      } else {
        T s, t;
        const T g = N::gcdext(a, p, s, t);
        Col<N> w = combine<N>(s, v, t, piv);
        Col<N> u = combine<N>(N::div_trunc(p, g), v, N::neg(N::div_trunc(a, g)), piv);
        piv = std::move(w);
        v = std::move(u);
      }
    }
  }
  return ech;
}

template <class N>
std::vector<typename N::T> dense_snf(std::vector<std::vector<typename N::T>> a, Deadline& deadline) {
  using T = typename N::T;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<T> diag;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest |value|, ties by (col, row)
    bool found = false;
    std::size_t pr = 0, pc = 0;
    for (std::size_t j = t; j < n; ++j) {
      for (std::size_t i = t; i < m; ++i) {
        if (N::is_zero(a[i][j])) continue;
        if (!found || N::abs_less(a[i][j], a[pr][pc])) {
          found = true;
          pr = i;
          pc = j;
        }
      }
    }
    if (!found) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);

    while (true) {
      deadline.check();
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (N::is_zero(a[i][t])) continue;
        const T q = N::div_trunc(a[i][t], a[t][t]);
        for (std::size_t j = t; j < n; ++j) {
          if (!N::is_zero(a[t][j])) a[i][j] = N::sub(a[i][j], N::mul(q, a[t][j]));
        }
        if (!N::is_zero(a[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (N::is_zero(a[t][j])) continue;
        const T q = N::div_trunc(a[t][j], a[t][t]);
        for (std::size_t i = t; i < m; ++i) {
          if (!N::is_zero(a[i][t])) a[i][j] = N::sub(a[i][j], N::mul(q, a[i][t]));
        }
        if (!N::is_zero(a[t][j])) clean = false;
      }
      if (!clean) {
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (!N::is_zero(a[i][t]) && N::abs_less(a[i][t], a[br][bc])) {
            br = i;
            bc = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!N::is_zero(a[t][j]) && N::abs_less(a[t][j], a[br][bc])) {
            br = t;
            bc = j;
          }
        }
        std::swap(a[t], a[br]);
        swap_cols(t, bc);
        continue;
      }
      bool bad = false;
      for (std::size_t i = t + 1; i < m && !bad; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!N::divides(a[t][t], a[i][j])) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = N::add(a[t][k], a[i][k]);
            bad = true;
            break;
          }
        }
      }
      if (!bad) break;
    }
    diag.push_back(N::abs(a[t][t]));
  }
  return diag;
}

template <class N>
SmithResult smith_impl(const SparseIntMatrix& m, Deadline& deadline) {
  using T = typename N::T;
  Echelon<N> ech = build_echelon<N>(m, deadline);

  SmithResult out;
  out.rank = ech.basis.size();

  auto is_unit_row = [&](std::uint32_t r) {
    const std::int32_t k = ech.pivot_of[r];
    return k >= 0 && N::is_unit(ech.basis[static_cast<std::size_t>(k)].back().second);
  };

  // Unit-pivot columns split off as invariant factors 1 once the remaining
  // columns are cleared on their pivot rows.
  std::vector<Col<N>> rest;
  std::size_t units = 0;
  for (const Col<N>& b : ech.basis) {
    if (N::is_unit(b.back().second)) {
      ++units;
    } else {
      rest.push_back(b);
    }
  }
  for (Col<N>& w : rest) {
    std::uint32_t limit = w.back().first;
    while (true) {
      deadline.check();
      std::size_t pos = std::lower_bound(w.begin(), w.end(), limit,
                                         [](const auto& e, std::uint32_t r) { return e.first < r; }) -
                        w.begin();
      bool hit = false;
      while (pos-- > 0) {
        if (is_unit_row(w[pos].first)) {
          hit = true;
          break;
        }
      }
      if (!hit) break;
      const std::uint32_t r = w[pos].first;
      const Col<N>& b = ech.basis[static_cast<std::size_t>(ech.pivot_of[r])];
      const T factor = N::mul(w[pos].second, b.back().second);  // pivot is +-1
      w = combine<N>(T(1), w, N::neg(factor), b);
      limit = r;
    }
  }

  std::vector<std::uint32_t> rows;
  for (const Col<N>& w : rest)
    for (const auto& e : w) rows.push_back(e.first);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<std::vector<T>> dense(rows.size(), std::vector<T>(rest.size(), T(0)));
  for (std::size_t c = 0; c < rest.size(); ++c) {
    for (const auto& e : rest[c]) {
      const std::size_t r = std::lower_bound(rows.begin(), rows.end(), e.first) - rows.begin();
      dense[r][c] = e.second;
    }
  }
  const std::vector<T> tail = dense_snf<N>(std::move(dense), deadline);

  out.invariant_factors.assign(units, 1);
  for (const T& d : tail) out.invariant_factors.push_back(N::to_i64(d));
  if (out.invariant_factors.size() != out.rank) {
    throw Error(ErrorKind::Overflow, "internal: Smith reduction lost rank");
  }
  return out;
}

}  // namespace

SmithResult smith(const SparseIntMatrix& m, const Budget& budget) {
  Deadline deadline(budget.max_elimination_seconds);
  try {
    return smith_impl<Checked64>(m, deadline);
  } catch (const OverflowError&) {
    return smith_impl<Bignum>(m, deadline);
  }
}

SmithResult smith_bignum(const SparseIntMatrix& m, const Budget& budget) {
  Deadline deadline(budget.max_elimination_seconds);
  return smith_impl<Bignum>(m, deadline);
}

std::size_t integer_rank(const SparseIntMatrix& m, const Budget& budget) {
  Deadline deadline(budget.max_elimination_seconds);
  try {
    return build_echelon<Checked64>(m, deadline).basis.size();
  } catch (const OverflowError&) {
    return build_echelon<Bignum>(m, deadline).basis.size();
  }
}

}  // namespace qhom
