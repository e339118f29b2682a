#include "qhom/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>

#include "qhom/error.hpp"

namespace qhom {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), col_start_(cols + 1, 0) {}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense[0].size() : 0;
  SparseIntMatrix m(rows, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Entry> col;
    for (std::size_t r = 0; r < rows; ++r) {
      if (dense[r].size() != cols) throw Error(ErrorKind::Parse, "ragged dense matrix");
      if (dense[r][c] != 0) col.push_back({static_cast<std::uint32_t>(r), dense[r][c]});
    }
    m.push_column(std::move(col));
  }
  return m;
}

void SparseIntMatrix::push_column(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    const std::uint32_t row = entries[i].row;
    if (row >= rows_) throw Error(ErrorKind::Parse, "row index out of range in matrix column");
    std::int64_t sum = 0;
    for (; i < entries.size() && entries[i].row == row; ++i) {
      if (__builtin_add_overflow(sum, entries[i].value, &sum)) throw OverflowError();
    }
    if (sum != 0) entries[out++] = {row, sum};
  }
  entries.resize(out);
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  col_start_.push_back(entries_.size());
}

std::int64_t SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto [b, e] = column(c);
  auto it = std::lower_bound(b, e, r, [](const Entry& x, std::size_t row) { return x.row < row; });
  return (it != e && it->row == r) ? it->value : 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<std::size_t> count(rows_ + 1, 0);
  for (const Entry& e : entries_) ++count[e.row + 1];
  for (std::size_t r = 0; r < rows_; ++r) count[r + 1] += count[r];
  SparseIntMatrix t;
  t.rows_ = cols();
  t.col_start_ = count;
  t.entries_.resize(entries_.size());
  std::vector<std::size_t> next(count.begin(), count.end() - 1);
  for (std::size_t c = 0; c < cols(); ++c) {
    auto [b, e] = column(c);
    for (auto it = b; it != e; ++it) t.entries_[next[it->row]++] = {static_cast<std::uint32_t>(c), it->value};
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
  if (cols() != rhs.rows()) throw Error(ErrorKind::ElementMismatch, "matrix dimensions do not chain");
  SparseIntMatrix out(rows_, 0);
  std::vector<std::int64_t> acc(rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    auto [rb, re] = rhs.column(c);
    for (auto k = rb; k != re; ++k) {
      auto [b, e] = column(k->row);
      for (auto it = b; it != e; ++it) {
        if (acc[it->row] == 0) touched.push_back(it->row);
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(it->value, k->value, &prod) ||
            __builtin_add_overflow(acc[it->row], prod, &acc[it->row])) {
          throw OverflowError();
        }
      }
    }
    std::vector<Entry> col;
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) col.push_back({r, acc[r]});
      acc[r] = 0;
    }
    touched.clear();
    out.push_column(std::move(col));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c) {
    auto [b, e] = column(c);
    for (auto it = b; it != e; ++it) d[it->row][c] = it->value;
  }
  return d;
}

void SparseIntMatrix::write_coordinate(std::ostream& os) const {
  os << rows_ << ' ' << cols() << ' ' << nonzeros() << '\n';
  for (std::size_t c = 0; c < cols(); ++c) {
    auto [b, e] = column(c);
    for (auto it = b; it != e; ++it) os << it->row << ' ' << c << ' ' << it->value << '\n';
  }
}

}  // namespace qhom
