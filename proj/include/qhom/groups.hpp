#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhom/error.hpp"

namespace qhom {

// Element of a finite abelian group: coordinate-wise reduced residues.
struct GroupElem {
  std::vector<std::int64_t> coords;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

// Finite abelian group Z_{m_0} + ... + Z_{m_{k-1}}, factor order as given.
// Elements are indexed lexicographically on coordinate tuples with the first
// coordinate most significant; every module shares this indexing.
class FinAbGroup {
 public:
  explicit FinAbGroup(std::vector<std::int64_t> moduli,
                      std::size_t max_order = default_budget().max_group_order);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t order() const { return order_; }
  std::size_t num_factors() const { return moduli_.size(); }
  bool all_odd() const;

  GroupElem zero() const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem scale(std::int64_t k, const GroupElem& a) const;
  // The unique b with b + b = a; requires every modulus odd.
  GroupElem halve(const GroupElem& a) const;

  // i-th standard basis vector e_i.
  GroupElem basis(std::size_t i) const;
  GroupElem element(std::size_t index) const;
  std::size_t index_of(const GroupElem& a) const;
  GroupElem make(std::vector<std::int64_t> coords) const;  // reduces coordinates

  std::string to_string() const;
  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.moduli_ == b.moduli_; }

 private:
  void check(const GroupElem& a) const;

  std::vector<std::int64_t> moduli_;
  std::size_t order_ = 1;
};

FinAbGroup make_group(const std::vector<std::int64_t>& moduli);

// Exterior square of a FinAbGroup: one Z_d component per pair i < j with
// d = gcd(m_i, m_j) > 1.
struct ExtSquare {
  struct Component {
    std::size_t i;
    std::size_t j;
    std::int64_t modulus;
    friend bool operator==(const Component&, const Component&) = default;
  };
  std::vector<Component> components;

  std::size_t order() const;
  std::vector<std::int64_t> moduli() const;
};

using ExtElem = std::vector<std::int64_t>;

ExtSquare exterior_square(const FinAbGroup& g);
ExtElem ext_zero(const ExtSquare& ext);
ExtElem ext_add(const ExtSquare& ext, const ExtElem& a, const ExtElem& b);
ExtElem ext_scale(const ExtSquare& ext, std::int64_t k, const ExtElem& a);
// Every element of the exterior square, lexicographic on residue tuples.
std::vector<ExtElem> ext_elements(const ExtSquare& ext);

// x ^ y: component (i,j) is x_i*y_j - x_j*y_i reduced mod gcd(m_i, m_j).
ExtElem wedge(const FinAbGroup& g, const ExtSquare& ext, const GroupElem& x, const GroupElem& y);
ExtElem wedge(const FinAbGroup& g, const GroupElem& x, const GroupElem& y);

// Arbitrary finite group given by a validated multiplication table.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  // Validates shape, identity, inverses, Latin-square property and
  // associativity (exhaustively); throws Error(NotAGroup) with a witness.
  static FiniteGroup from_mult_table(const Table& mult, std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return id_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t pow(std::size_t a, std::int64_t k) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  Table table() const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// FinAbGroup as a multiplication table under the shared enumeration.
FiniteGroup from_abelian(const FinAbGroup& g);
// Upper unitriangular 3x3 matrices over Z_3; element (a,b,c) is
// [[1,a,c],[0,1,b],[0,0,1]], indexed 9a + 3b + c.
FiniteGroup heisenberg3();
// Z_9 x| Z_3: (i,j)(k,l) = (i + k*4^j mod 9, j + l mod 3), indexed 3i + j.
FiniteGroup g4_27();

// Generators of g4_27 satisfying s^9 = t^3 = 1, st = ts^4.
struct G4Generators {
  std::size_t s;
  std::size_t t;
};
G4Generators g4_27_generators();

// Generators of heisenberg3 satisfying x^3 = y^3 = z^3 = 1, yz = zyx,
// xy = yx, xz = zx (x central).
struct HeisenbergGenerators {
  std::size_t x;
  std::size_t y;
  std::size_t z;
};
HeisenbergGenerators heisenberg3_generators();

}  // namespace qhom
