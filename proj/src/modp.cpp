#include <algorithm>

#include "qhom/intlinalg.hpp"
#include "qhom/kernels/modp_kernels.hpp"

namespace qhom {

namespace {

constexpr std::size_t kDenseEntryLimit = std::size_t{1} << 22;

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidModulus, std::to_string(p) + " is not prime");
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

using Dense = std::vector<std::vector<std::uint32_t>>;

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(Dense& rows, std::size_t cols, std::uint32_t p) {
  const auto& k = kernels::active_kernels();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    k.scale(rows[r].data() + c, inverse_mod(rows[r][c], p), p, cols - c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      k.axpy(rows[i].data() + c, rows[r].data() + c, p - rows[i][c], p, cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorKind::InvalidModulus, std::to_string(a) + " is not invertible mod " + std::to_string(p));
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

ModpEchelon::ModpEchelon(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p), pivot_of_(dim, -1) {
  require_prime(p);
}

ModpEchelon::SparseVec ModpEchelon::reduce(SparseVec v) const {
  std::sort(v.begin(), v.end());
  SparseVec merged;
  for (const auto& [i, x] : v) {
    if (i >= dim_) throw Error(ErrorKind::ElementMismatch, "vector index out of range");
    if (!merged.empty() && merged.back().first == i) {
      merged.back().second = static_cast<std::uint32_t>((merged.back().second + x) % p_);
    } else {
      merged.emplace_back(i, x % p_);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  v = std::move(merged);

  SparseVec tmp;
  while (!v.empty()) {
    const std::int32_t k = pivot_of_[v.back().first];
    if (k < 0) break;
    const SparseVec& b = basis_[static_cast<std::size_t>(k)];
    // basis vectors are normalised to a trailing 1
    const std::uint64_t f = p_ - v.back().second;
    tmp.clear();
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < b.size()) {
      if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
        tmp.push_back(v[i++]);
      } else if (i == v.size() || b[j].first < v[i].first) {
        tmp.emplace_back(b[j].first, static_cast<std::uint32_t>(f * b[j].second % p_));
        ++j;
      } else {
        const auto x = static_cast<std::uint32_t>((v[i].second + f * b[j].second) % p_);
        if (x != 0) tmp.emplace_back(v[i].first, x);
        ++i;
        ++j;
      }
    }
    std::swap(v, tmp);
  }
  return v;
}

bool ModpEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::uint64_t inv = inverse_mod(v.back().second, p_);
  for (auto& e : v) e.second = static_cast<std::uint32_t>(inv * e.second % p_);
  pivot_of_[v.back().first] = static_cast<std::int32_t>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

bool ModpEchelon::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

std::size_t rank_mod_p_sparse(const SparseIntMatrix& m, std::uint32_t p) {
  ModpEchelon ech(m.rows(), p);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    ModpEchelon::SparseVec v;
    auto [b, e] = m.column(c);
    for (auto it = b; it != e; ++it) v.emplace_back(it->row, reduce(it->value, p));
    ech.insert(std::move(v));
    if (ech.rank() == m.rows()) break;
  }
  return ech.rank();
}

std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p) {
  require_prime(p);
  const auto& k = kernels::active_kernels();
  const std::size_t len = m.rows();
  // Columns of m are streamed as dense rows (rank is transpose-invariant)
  // and reduced against the pivot rows found so far.
  Dense pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::uint32_t> row(len);
  for (std::size_t c = 0; c < m.cols() && pivot_rows.size() < len; ++c) {
    std::fill(row.begin(), row.end(), 0u);
    auto [b, e] = m.column(c);
    for (auto it = b; it != e; ++it) row[it->row] = reduce(it->value, p);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
      const std::size_t pc = pivot_cols[i];
      if (row[pc] != 0) k.axpy(row.data() + pc, pivot_rows[i].data() + pc, p - row[pc], p, len - pc);
    }
    const std::size_t lead = k.find_nonzero(row.data(), len);
    if (lead == len) continue;
    k.scale(row.data() + lead, inverse_mod(row[lead], p), p, len - lead);
    pivot_rows.push_back(row);
    pivot_cols.push_back(lead);
  }
  return pivot_rows.size();
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  if (m.rows() * m.cols() <= kDenseEntryLimit) return rank_mod_p_dense(m, p);
  return rank_mod_p_sparse(m, p);
}

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  require_prime(p);
  const std::size_t n = m.cols();
  // Row space of m, gathered sparsely, then reduced densely.
  const SparseIntMatrix t = m.transpose();
  ModpEchelon ech(n, p);
  for (std::size_t r = 0; r < t.cols(); ++r) {
    ModpEchelon::SparseVec v;
    auto [b, e] = t.column(r);
    for (auto it = b; it != e; ++it) v.emplace_back(it->row, reduce(it->value, p));
    ech.insert(std::move(v));
    if (ech.rank() == n) break;
  }
  Dense rows;
  rows.reserve(ech.rank());
  for (const auto& v : ech.basis()) {
    std::vector<std::uint32_t> row(n, 0);
    for (const auto& [i, x] : v) row[i] = x;
    rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref(rows, n, p);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = rows[k][f] == 0 ? 0 : p - rows[k][f];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace qhom
