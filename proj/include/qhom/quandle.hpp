#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qhom/groups.hpp"

namespace qhom {

enum class Provenance { Takasaki, Core, Dihedral, Extension, Custom };

const char* to_string(Provenance p);

// A table that may or may not satisfy the quandle axioms.
using CandidateTable = std::vector<std::vector<std::int64_t>>;

enum class Axiom { Shape, Idempotency, RightInvertibility, SelfDistributivity };

const char* to_string(Axiom a);

struct AxiomFailure {
  Axiom axiom;
  std::vector<std::size_t> witness;
  std::string message;
};

// std::monostate = every axiom holds.
using AxiomReport = std::variant<std::monostate, AxiomFailure>;

inline bool ok(const AxiomReport& r) { return std::holds_alternative<std::monostate>(r); }

AxiomReport verify_axioms(const CandidateTable& table);

// Finite quandle on {0, ..., n-1}; table(a, b) = a * b. Instances always
// satisfy the axioms: every constructor runs verify_axioms.
class FiniteQuandle {
 public:
  // Throws Error(Parse) carrying the failure report if the axioms fail.
  static FiniteQuandle from_table(const CandidateTable& table, Provenance provenance = Provenance::Custom,
                                  std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  std::uint32_t op(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  // c *bar b: the unique a with a * b = c.
  std::uint32_t left_divide(std::size_t c, std::size_t b) const { return right_inverse_[c * n_ + b]; }
  bool quasigroup() const { return !row_inverse_.empty(); }
  // Precondition: quasigroup().
  std::uint32_t circ_unchecked(std::size_t a, std::size_t c) const { return row_inverse_[a * n_ + c]; }
  Provenance provenance() const { return provenance_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint32_t>& flat_table() const { return table_; }
  CandidateTable table() const;

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) { return a.table_ == b.table_; }

 private:
  FiniteQuandle() = default;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> right_inverse_;
  std::vector<std::uint32_t> row_inverse_;
  Provenance provenance_ = Provenance::Custom;
  std::vector<std::string> labels_;
};

// a * b = 2b - a on G under the shared lexicographic enumeration.
FiniteQuandle takasaki(const FinAbGroup& g);
// g * h = h g^-1 h.
FiniteQuandle core(const FiniteGroup& g);
// takasaki(Z_n).
FiniteQuandle dihedral(std::size_t n);
// Trivial quandle: a * b = a.
FiniteQuandle trivial_quandle(std::size_t n);

bool is_kei(const FiniteQuandle& q);
bool is_quasigroup(const FiniteQuandle& q);
std::uint32_t left_divide(const FiniteQuandle& q, std::size_t c, std::size_t b);
// The unique b with a * b = c; throws Error(NotAQuasigroup) otherwise.
std::uint32_t circ(const FiniteQuandle& q, std::size_t a, std::size_t c);
// Components of the relation generated by a ~ a*b; each block sorted,
// blocks ordered by smallest element.
std::vector<std::vector<std::size_t>> orbits(const FiniteQuandle& q);

}  // namespace qhom
