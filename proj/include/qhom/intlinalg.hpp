#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhom/error.hpp"
#include "qhom/sparse_matrix.hpp"

namespace qhom {

// Invariant factors d_1 | d_2 | ... | d_rank of an integer matrix.
struct SmithResult {
  std::size_t rank = 0;
  std::vector<std::int64_t> invariant_factors;
  friend bool operator==(const SmithResult&, const SmithResult&) = default;
};

// Smith normal form (diagonal only) over Z. Runs on checked 64-bit integers
// and restarts on GMP integers if any intermediate value overflows. Throws
// Error(ResourceLimit) when the budget's elimination time is exceeded and
// Error(Overflow) if a final invariant factor does not fit in 64 bits.
SmithResult smith(const SparseIntMatrix& m, const Budget& budget = default_budget());

// Same result, forcing the bignum path from the start.
SmithResult smith_bignum(const SparseIntMatrix& m, const Budget& budget = default_budget());

// Rank over Q (exact lattice echelon, no Smith post-processing).
std::size_t integer_rank(const SparseIntMatrix& m, const Budget& budget = default_budget());

bool is_prime(std::uint64_t p);

// Rank over F_p. Dispatches to the dense kernel path for small matrices and
// to sparse elimination otherwise.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_mod_p_sparse(const SparseIntMatrix& m, std::uint32_t p);

// Basis of {v : M v = 0 mod p}; each vector has length m.cols() and entries
// in [0, p). The basis is in reduced form: vector k has a 1 at the k-th free
// column and 0 at every other free column.
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const SparseIntMatrix& m, std::uint32_t p);

// Incremental row-echelon basis of a subspace of F_p^dim. Vectors are sparse
// (index, value) lists with values in [0, p).
class ModpEchelon {
 public:
  using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  ModpEchelon(std::size_t dim, std::uint32_t p);

  // Reduces v against the basis; if a nonzero remainder is left it joins the
  // basis and true is returned.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<SparseVec>& basis() const { return basis_; }

 private:
  SparseVec reduce(SparseVec v) const;

  std::size_t dim_;
  std::uint32_t p_;
  std::vector<std::int32_t> pivot_of_;  // index -> basis slot or -1
  std::vector<SparseVec> basis_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace qhom
