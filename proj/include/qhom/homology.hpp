#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhom/error.hpp"
#include "qhom/groups.hpp"
#include "qhom/intlinalg.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

enum class Theory { Rack, Quandle };

const char* to_string(Theory t);

using Tuple = std::vector<std::uint32_t>;

// Basis of C_n: all n-tuples (rack) or the tuples with no adjacent repeat
// (quandle), both in lexicographic order. Tuples are ranked and unranked
// arithmetically; nothing is materialised.
class ChainBasis {
 public:
  ChainBasis(std::size_t quandle_size, std::size_t degree, Theory theory);

  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  Theory theory() const { return theory_; }

  Tuple tuple(std::size_t index) const;
  // Index of a basis tuple; returns size() for a degenerate tuple in the
  // quandle theory.
  std::size_t index_of(const Tuple& t) const;
  bool contains(const Tuple& t) const;

 private:
  std::size_t n_;
  std::size_t degree_;
  Theory theory_;
  std::size_t size_ = 0;
};

// Sparse integer combination of tuples of one degree.
class Chain {
 public:
  explicit Chain(std::size_t degree = 0) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  void add(const Tuple& t, std::int64_t coeff);
  const std::map<Tuple, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const Tuple& t) const;

  // Drops tuples with an adjacent repeat (projection onto C^Q).
  Chain project_quandle() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t k, const Chain& c);
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::size_t degree_;
  std::map<Tuple, std::int64_t> terms_;
};

bool is_degenerate(const Tuple& t);

// Rack differential
//   d(x_1..x_n) = sum_{i=2..n} (-1)^i [ (x_1..^x_i..x_n)
//                                      - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n) ]
// so d(a,b) = (a) - (a*b) and d(a,b,c) = (a,c) + (a*c,b*c) - (a,b) - (a*b,c).
// The quandle theory drops degenerate output tuples. Degree 1 maps to zero.
Chain boundary(const FiniteQuandle& q, const Tuple& tuple, Theory theory);
Chain boundary(const FiniteQuandle& q, const Chain& chain, Theory theory);

// Rows indexed by ChainBasis(n-1), columns by ChainBasis(n).
SparseIntMatrix boundary_matrix(const FiniteQuandle& q, std::size_t degree, Theory theory,
                                const Budget& budget = default_budget());

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // entries >= 2, each dividing the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z^2 + Z_2 + Z_2" style (the human output uses the circled plus)
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const FiniteQuandle& q, std::size_t degree, Theory theory,
                       const Budget& budget = default_budget());

// Torsion entries > 1 from a list of invariant factors.
std::vector<std::int64_t> torsion_of(const SmithResult& s);

// H_2^Q of a quasigroup quandle from the bracket presentation on Q x Q
// with relations [x,x], [a0,x] and [x,z] + [z,y] - [x,z'] - [z',y], where
// z' = y *bar (x o z). Generator [x,z] has index x*n + z.
HomologyGroup h2_presentation_quasigroup(const FiniteQuandle& q, std::size_t basepoint,
                                         const Budget& budget = default_budget());
SparseIntMatrix h2_presentation_matrix(const FiniteQuandle& q, std::size_t basepoint);

// Linear extension of (a,b) -> a ^ (a*b) = a ^ (2b - a) on chains over T(G).
ExtElem class_in_ext_square(const FinAbGroup& g, const Chain& chain);

// (x, (x+y)/2) - (0, y/2) + (0, x/2), projected to the quandle theory: a
// 2-cycle of T(G) whose class is x ^ y.
Chain wedge_to_cycle(const FinAbGroup& g, const GroupElem& x, const GroupElem& y);

struct Cohomology2 {
  std::size_t dimension = 0;
  std::uint32_t p = 0;
  // Representative cocycles as n x n tables (zero on the diagonal).
  std::vector<std::vector<std::vector<std::uint32_t>>> representatives;
};

// dim over F_p of H^2_Q(Q; Z_p) with explicit cocycle representatives.
Cohomology2 cohomology2(const FiniteQuandle& q, std::uint32_t p, const Budget& budget = default_budget());
std::size_t cohomology2_dim(const FiniteQuandle& q, std::uint32_t p, const Budget& budget = default_budget());

}  // namespace qhom
