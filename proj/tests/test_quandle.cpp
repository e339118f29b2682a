#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qhom/error.hpp"
#include "qhom/groups.hpp"
#include "qhom/quandle.hpp"

using namespace qhom;

namespace {

// Conjugation quandle a * b = b^-1 a b on the symmetric group S_3.
CandidateTable s3_conjugation() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<std::int64_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = f[g[i]];
    return r;
  };
  auto inverse = [](const std::array<int, 3>& f) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[f[i]] = i;
    return r;
  };
  CandidateTable t(6, std::vector<std::int64_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) t[a][b] = index(compose(inverse(perms[b]), compose(perms[a], perms[b])));
  return t;
}

}  // namespace

TEST_CASE("takasaki operation") {
  const auto q5 = dihedral(5);
  CHECK(q5.op(1, 2) == 3);
  const auto g = make_group({3, 3});
  const auto q = takasaki(g);
  CHECK(q.op(g.index_of(g.make({1, 0})), g.index_of(g.make({0, 1}))) == g.index_of(g.make({2, 2})));
  for (std::size_t a = 0; a < q.size(); ++a) CHECK(q.op(a, a) == a);
  CHECK(q.provenance() == Provenance::Takasaki);
}

TEST_CASE("core quandle") {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{3, 9}, {5}, {3, 3, 3}, {4, 2}}) {
    const auto g = make_group(moduli);
    CHECK(core(from_abelian(g)).table() == takasaki(g).table());
  }
  const auto h = heisenberg3();
  const auto c = core(h);
  for (std::size_t x = 0; x < 27; ++x) {
    CHECK(c.op(x, x) == x);
    CHECK(c.op(h.identity(), x) == h.mul(x, x));
  }
}

TEST_CASE("dihedral") {
  CHECK(dihedral(3).op(0, 1) == 2);
  CHECK(dihedral(4).op(0, 1) == 2);
  CHECK(dihedral(4).op(2, 1) == 0);
  CHECK(dihedral(1).size() == 1);
}

TEST_CASE("verify_axioms") {
  CHECK(ok(verify_axioms(dihedral(7).table())));
  CHECK(ok(verify_axioms({{0, 0}, {1, 1}})));
  auto bad = dihedral(3).table();
  bad[0][0] = 1;
  const auto r = verify_axioms(bad);
  REQUIRE_FALSE(ok(r));
  CHECK(std::get<AxiomFailure>(r).axiom == Axiom::Idempotency);
  CHECK(std::get<AxiomFailure>(r).witness == std::vector<std::size_t>{0});
  CHECK(std::get<AxiomFailure>(verify_axioms({{0, 1}, {0, 1}})).axiom == Axiom::RightInvertibility);
  CHECK(std::get<AxiomFailure>(verify_axioms({{0, 1, 2}, {1}})).axiom == Axiom::Shape);
  CHECK(std::get<AxiomFailure>(verify_axioms({{0, 5}, {1, 1}})).axiom == Axiom::Shape);
  // idempotent and right-invertible but not self-distributive
  const CandidateTable nd{{0, 2, 1, 0}, {2, 1, 0, 2}, {1, 0, 2, 3}, {3, 3, 3, 1}};
  const auto f = verify_axioms(nd);
  REQUIRE_FALSE(ok(f));
  CHECK(std::get<AxiomFailure>(f).axiom != Axiom::Shape);
  CHECK_THROWS_AS(FiniteQuandle::from_table(bad), Error);
  CHECK(ok(verify_axioms(s3_conjugation())));
}

TEST_CASE("kei and quasigroup") {
  CHECK(is_kei(dihedral(5)));
  CHECK(is_kei(core(heisenberg3())));
  CHECK_FALSE(is_kei(FiniteQuandle::from_table(s3_conjugation())));
  CHECK(is_quasigroup(dihedral(5)));
  CHECK_FALSE(is_quasigroup(dihedral(4)));
  CHECK(is_quasigroup(takasaki(make_group({3, 9}))));
  CHECK_FALSE(is_quasigroup(trivial_quandle(2)));
}

TEST_CASE("left division and circ") {
  const auto q5 = dihedral(5);
  CHECK(left_divide(q5, 3, 2) == 1);
  CHECK(circ(q5, 1, 3) == 2);
  for (auto* q : {&q5}) {
    for (std::size_t a = 0; a < q->size(); ++a) {
      CHECK(circ(*q, a, a) == a);
      for (std::size_t b = 0; b < q->size(); ++b) {
        CHECK(left_divide(*q, q->op(a, b), b) == a);
        CHECK(q->op(a, circ(*q, a, b)) == b);
      }
    }
  }
  const auto g = make_group({3, 3});
  const auto t = takasaki(g);
  CHECK(left_divide(t, g.index_of(g.make({2, 2})), g.index_of(g.make({0, 1}))) == g.index_of(g.make({1, 0})));
  try {
    circ(dihedral(4), 0, 1);
    FAIL("circ on Z_4 succeeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAQuasigroup);
  }
}

TEST_CASE("orbits match brute-force closure") {
  CHECK(orbits(dihedral(5)).size() == 1);
  const auto o4 = orbits(dihedral(4));
  REQUIRE(o4.size() == 2);
  CHECK(o4[0] == std::vector<std::size_t>{0, 2});
  CHECK(o4[1] == std::vector<std::size_t>{1, 3});
  CHECK(orbits(trivial_quandle(2)).size() == 2);
  std::vector<FiniteQuandle> qs{dihedral(6), dihedral(8), takasaki(make_group({2, 4})), trivial_quandle(3),
                                FiniteQuandle::from_table(s3_conjugation()), core(g4_27())};
  for (const auto& q : qs) {
    const auto expect = oracle::orbits_bruteforce(q.size(), [&](std::size_t a, std::size_t b) { return q.op(a, b); });
    const auto got = orbits(q);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(std::set<std::size_t>(got[i].begin(), got[i].end()) == expect[i]);
  }
}
