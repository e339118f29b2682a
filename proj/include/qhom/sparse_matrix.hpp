#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace qhom {

// Column-compressed integer matrix. Row indices strictly increase within a
// column and no stored value is zero.
class SparseIntMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return col_start_.size() - 1; }
  std::size_t nonzeros() const { return entries_.size(); }

  // Appends a column; duplicates are summed and zeros dropped.
  void push_column(std::vector<Entry> entries);

  std::pair<const Entry*, const Entry*> column(std::size_t c) const {
    return {entries_.data() + col_start_[c], entries_.data() + col_start_[c + 1]};
  }
  std::int64_t at(std::size_t r, std::size_t c) const;

  SparseIntMatrix transpose() const;
  SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;
  bool is_zero() const { return entries_.empty(); }

  // "row col value" lines, 0-based, preceded by a "rows cols nnz" header.
  void write_coordinate(std::ostream& os) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<Entry> entries_;
};

}  // namespace qhom
