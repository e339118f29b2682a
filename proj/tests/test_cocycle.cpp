#include <doctest.h>

#include <numeric>
#include <random>

#include "qhom/cocycle.hpp"
#include "qhom/error.hpp"
#include "qhom/groups.hpp"
#include "qhom/homology.hpp"
#include "qhom/quandle.hpp"

using namespace qhom;

namespace {

std::vector<std::int64_t> random_psi(std::mt19937_64& rng, std::size_t n, std::int64_t m) {
  std::vector<std::int64_t> psi(n);
  for (auto& v : psi) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
  return psi;
}

}  // namespace

TEST_CASE("validation") {
  const auto q = takasaki(make_group({3, 3}));
  CHECK(std::holds_alternative<TwoCocycle>(validate(q, 3, CocycleTable(9, std::vector<std::int64_t>(9)))));
  auto diag = CocycleTable(9, std::vector<std::int64_t>(9));
  diag[4][4] = 1;
  const auto r = validate(q, 3, diag);
  REQUIRE(std::holds_alternative<CocycleFailure>(r));
  CHECK(std::get<CocycleFailure>(r).kind == CocycleFailure::Kind::Diagonal);
  CHECK(std::get<CocycleFailure>(r).witness == std::vector<std::size_t>{4});
  auto broken = generator_cocycle(3).table();
  broken[0][1] = (broken[0][1] + 1) % 3;
  CHECK(std::get<CocycleFailure>(validate(q, 3, broken)).kind == CocycleFailure::Kind::CocycleCondition);
  CHECK(std::get<CocycleFailure>(validate(q, 3, CocycleTable(2, std::vector<std::int64_t>(2)))).kind ==
        CocycleFailure::Kind::Shape);
  try {
    make_cocycle(q, 3, broken);
    FAIL("invalid cocycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCocycle);
  }
}

TEST_CASE("generator cocycle values") {
  const auto g = make_group({3, 3});
  const auto e1 = g.index_of(g.basis(0)), e2 = g.index_of(g.basis(1));
  const auto halved = generator_cocycle(3, Normalization::Halved);
  CHECK(halved(e1, e2) == 1);
  CHECK(halved(e2, e1) == 2);
  CHECK(generator_cocycle(3, Normalization::Plain)(e1, e2) == 2);
  for (std::int64_t p : {3, 5, 7}) {
    for (auto norm : {Normalization::Plain, Normalization::Halved}) {
      const auto phi = generator_cocycle(p, norm);
      CHECK(phi.modulus() == p);
      for (std::size_t x = 0; x < phi.quandle().size(); ++x) CHECK(phi(x, x) == 0);
      // make_cocycle re-validates the condition
      CHECK_NOTHROW(make_cocycle(phi.quandle(), p, phi.table()));
    }
  }
  CHECK_THROWS_AS(generator_cocycle(4), Error);
  CHECK_THROWS_AS(generator_cocycle(9), Error);
}

TEST_CASE("coboundaries") {
  std::mt19937_64 rng(17);
  const auto q = takasaki(make_group({3, 3}));
  const auto zero = zero_cocycle(q, 3);
  const auto w = is_coboundary(zero);
  REQUIRE(w.has_value());
  CHECK(std::all_of(w->begin(), w->end(), [](auto v) { return v == 0; }));
  CHECK_FALSE(is_coboundary(generator_cocycle(3)).has_value());
  CHECK_FALSE(is_coboundary(generator_cocycle(3, Normalization::Plain)).has_value());
  CHECK_FALSE(is_coboundary(generator_cocycle(5)).has_value());
  for (int t = 0; t < 20; ++t) {
    const auto psi = random_psi(rng, q.size(), 3);
    const auto d = coboundary(q, 3, psi);
    const auto witness = is_coboundary(d);
    REQUIRE(witness.has_value());
    CHECK(coboundary(q, 3, *witness).table() == d.table());
    CHECK_FALSE(is_coboundary(add_scaled(d, 1, generator_cocycle(3))).has_value());
  }
}

TEST_CASE("extension of T(Z_3^2)") {
  const auto e = central_extension(generator_cocycle(3));
  CHECK(e.size() == 27);
  CHECK(e.provenance() == Provenance::Extension);
  CHECK(is_kei(e));
  CHECK_FALSE(is_quasigroup(e));
  CHECK(homology(e, 2, Theory::Quandle).is_trivial());
  CHECK(central_extension(generator_cocycle(5)).size() == 125);
}

TEST_CASE("extension by the zero cocycle is a product") {
  const auto base = takasaki(make_group({3, 3}));
  const auto e = central_extension(zero_cocycle(base, 3));
  CandidateTable prod(27, std::vector<std::int64_t>(27));
  for (std::size_t x = 0; x < 9; ++x)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t y = 0; y < 9; ++y)
        for (std::size_t b = 0; b < 3; ++b) prod[x * 3 + a][y * 3 + b] = static_cast<std::int64_t>(base.op(x, y) * 3 + a);
  const auto p = FiniteQuandle::from_table(prod);
  std::vector<std::size_t> id(27);
  std::iota(id.begin(), id.end(), 0);
  CHECK(is_isomorphism(e, p, id));
  CHECK(homology(e, 2, Theory::Quandle) == homology(p, 2, Theory::Quandle));
  CHECK(homology(e, 1, Theory::Quandle) == HomologyGroup{3, {}});
}

TEST_CASE("isomorphic extensions") {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {3, 5}) {
    const auto phi = generator_cocycle(p);
    const auto base = phi.quandle();
    const auto m = static_cast<std::size_t>(p);
    const auto e1 = central_extension(phi);
    // (x, a) -> (x, 2a) carries E(phi) onto E(2 phi)
    const auto e2 = central_extension(add_scaled(phi, 1, phi));
    std::vector<std::size_t> doubling(e1.size());
    for (std::size_t x = 0; x < base.size(); ++x)
      for (std::size_t a = 0; a < m; ++a) doubling[x * m + a] = x * m + (2 * a) % m;
    CHECK(is_isomorphism(e1, e2, doubling));
    // (x, a) -> (x, a - psi(x)) carries E(phi) onto E(phi + delta psi)
    for (int t = 0; t < 5; ++t) {
      const auto psi = random_psi(rng, base.size(), p);
      const auto shifted = add_scaled(phi, 1, coboundary(base, p, psi));
      const auto e3 = central_extension(shifted);
      CHECK(is_kei(e3));
      std::vector<std::size_t> shift(e1.size());
      for (std::size_t x = 0; x < base.size(); ++x)
        for (std::size_t a = 0; a < m; ++a)
          shift[x * m + a] = x * m + static_cast<std::size_t>(((static_cast<std::int64_t>(a) - psi[x]) % p + p) % p);
      CHECK(is_isomorphism(e1, e3, shift));
    }
    std::vector<std::size_t> id(e1.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(is_isomorphism(e1, e1, id));
    CHECK_FALSE(is_isomorphism(e1, e2, id));
  }
}
