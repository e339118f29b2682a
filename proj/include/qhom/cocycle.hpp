#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhom/quandle.hpp"

namespace qhom {

using CocycleTable = std::vector<std::vector<std::int64_t>>;

// Z_m-valued quandle 2-cocycle: phi(a,a) = 0 and
// phi(a,c) + phi(a*c, b*c) - phi(a,b) - phi(a*b, c) = 0 for all a, b, c.
class TwoCocycle {
 public:
  const FiniteQuandle& quandle() const { return quandle_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t operator()(std::size_t a, std::size_t b) const { return values_[a * quandle_.size() + b]; }
  CocycleTable table() const;

  friend class CocycleBuilder;

 private:
  TwoCocycle(FiniteQuandle q, std::int64_t m, std::vector<std::int64_t> values)
      : quandle_(std::move(q)), modulus_(m), values_(std::move(values)) {}

  FiniteQuandle quandle_;
  std::int64_t modulus_;
  std::vector<std::int64_t> values_;
};

struct CocycleFailure {
  enum class Kind { Shape, Diagonal, CocycleCondition } kind;
  std::vector<std::size_t> witness;
  std::string message;
};

std::variant<TwoCocycle, CocycleFailure> validate(const FiniteQuandle& q, std::int64_t m, const CocycleTable& table);

// Like validate but throws Error(InvalidCocycle) on failure.
TwoCocycle make_cocycle(const FiniteQuandle& q, std::int64_t m, const CocycleTable& table);

TwoCocycle zero_cocycle(const FiniteQuandle& q, std::int64_t m);

// phi(a,b) = psi(a) - psi(a*b) mod m.
TwoCocycle coboundary(const FiniteQuandle& q, std::int64_t m, const std::vector<std::int64_t>& psi);
// phi + k * other (same quandle and modulus).
TwoCocycle add_scaled(const TwoCocycle& phi, std::int64_t k, const TwoCocycle& other);

// Witness psi with phi = delta psi, if one exists. Requires a prime modulus.
std::optional<std::vector<std::int64_t>> is_coboundary(const TwoCocycle& phi);

enum class Normalization { Plain, Halved };

// On T(Z_p + Z_p): plain phi(x1,x2) = (e1* ^ e2*)(x1 ^ x1*x2)
// = 2(x1_1 x2_2 - x1_2 x2_1) mod p; halved multiplies by 2^-1 so that
// phi(e1,e2) = 1.
TwoCocycle generator_cocycle(std::int64_t p, Normalization normalization = Normalization::Halved);

// E(Q, Z_m, phi) on pairs (x, a) indexed x*m + a, with
// (x1,a1) * (x2,a2) = (x1*x2, a1 + phi(x1,x2)).
FiniteQuandle central_extension(const TwoCocycle& phi);

// True iff perm is a bijection with perm[a*b] = perm[a]*perm[b].
bool is_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::size_t>& perm);

}  // namespace qhom
