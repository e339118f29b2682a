#include <doctest.h>

#include <map>

#include "builtins.hpp"
#include "oracles.hpp"
#include "qhom/specs.hpp"
#include "qhom/error.hpp"
#include "qhom/groups.hpp"
#include "qhom/homology.hpp"
#include "qhom/intlinalg.hpp"
#include "qhom/quandle.hpp"

using namespace qhom;

namespace {

std::vector<Tuple> all_tuples(std::size_t n, std::size_t k, bool skip_adjacent) {
  std::vector<Tuple> out;
  Tuple t(k, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      out.push_back(t);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (skip_adjacent && pos > 0 && t[pos - 1] == v) continue;
      t[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Dense boundary matrix written straight from the formula.
oracle::Dense naive_boundary(const FiniteQuandle& q, std::size_t k, bool quandle_theory) {
  const auto cols = all_tuples(q.size(), k, quandle_theory);
  const auto rows = all_tuples(q.size(), k - 1, quandle_theory);
  std::map<Tuple, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  oracle::Dense m(rows.size(), std::vector<std::int64_t>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Tuple& x = cols[c];
    for (std::size_t i = 1; i < k; ++i) {
      const std::int64_t sign = (i + 1) % 2 == 0 ? 1 : -1;
      Tuple drop, act;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        drop.push_back(x[j]);
        act.push_back(j < i ? q.op(x[j], x[i]) : x[j]);
      }
      if (auto it = row_index.find(drop); it != row_index.end()) m[it->second][c] += sign;
      if (auto it = row_index.find(act); it != row_index.end()) m[it->second][c] -= sign;
    }
  }
  return m;
}

HomologyGroup naive_homology(const FiniteQuandle& q, std::size_t k, bool quandle_theory) {
  const std::size_t dim = all_tuples(q.size(), k, quandle_theory).size();
  std::size_t rank_in = 0;
  if (k >= 2) rank_in = oracle::smith_textbook(naive_boundary(q, k, quandle_theory)).size();
  const auto out = oracle::smith_textbook(naive_boundary(q, k + 1, quandle_theory));
  HomologyGroup h;
  h.free_rank = dim - rank_in - out.size();
  for (auto d : out)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::size_t count_divisible(const std::vector<std::int64_t>& xs, std::int64_t p) {
  return static_cast<std::size_t>(std::count_if(xs.begin(), xs.end(), [&](auto x) { return x % p == 0; }));
}

}  // namespace

TEST_CASE("chain bases") {
  CHECK(ChainBasis(3, 2, Theory::Quandle).size() == 6);
  CHECK(ChainBasis(3, 2, Theory::Rack).size() == 9);
  CHECK(ChainBasis(9, 3, Theory::Quandle).size() == 576);
  CHECK(ChainBasis(4, 0, Theory::Quandle).size() == 1);
  for (auto th : {Theory::Rack, Theory::Quandle}) {
    const ChainBasis b(4, 3, th);
    const auto expect = all_tuples(4, 3, th == Theory::Quandle);
    REQUIRE(b.size() == expect.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b.tuple(i) == expect[i]);
      CHECK(b.index_of(expect[i]) == i);
    }
  }
  const ChainBasis q(4, 3, Theory::Quandle);
  CHECK(q.index_of({1, 1, 2}) == q.size());
  CHECK_FALSE(q.contains({1, 2, 2}));
}

TEST_CASE("boundary formula") {
  const auto q = dihedral(5);
  const auto d = boundary(q, Tuple{1, 2}, Theory::Quandle);
  CHECK(d.coeff({1}) == 1);
  CHECK(d.coeff({3}) == -1);
  CHECK(d.terms().size() == 2);
  const auto g = make_group({3, 3});
  const auto t = takasaki(g);
  for (std::uint32_t a = 0; a < 9; a += 2)
    for (std::uint32_t b = 0; b < 9; b += 3)
      for (std::uint32_t c = 0; c < 9; ++c) {
        Chain expect(2);
        expect.add({a, c}, 1);
        expect.add({t.op(a, c), t.op(b, c)}, 1);
        expect.add({a, b}, -1);
        expect.add({t.op(a, b), c}, -1);
        CHECK(boundary(t, Tuple{a, b, c}, Theory::Rack) == expect);
        CHECK(boundary(t, Tuple{a, b, c}, Theory::Quandle) == expect.project_quandle());
        CHECK(boundary(t, boundary(t, Tuple{a, b, c}, Theory::Rack), Theory::Rack).is_zero());
      }
}

TEST_CASE("boundary matrices match the naive construction") {
  std::vector<FiniteQuandle> qs{dihedral(3), dihedral(4), trivial_quandle(2), takasaki(make_group({2, 2}))};
  for (const auto& q : qs) {
    for (std::size_t k = 2; k <= 4; ++k) {
      for (auto th : {Theory::Rack, Theory::Quandle}) {
        CHECK(boundary_matrix(q, k, th).to_dense() == naive_boundary(q, k, th == Theory::Quandle));
      }
    }
  }
  CHECK(boundary_matrix(dihedral(3), 2, Theory::Quandle).rows() == 3);
  CHECK(boundary_matrix(dihedral(3), 2, Theory::Quandle).cols() == 6);
  const auto m3 = boundary_matrix(takasaki(make_group({3, 3})), 3, Theory::Quandle);
  CHECK(m3.rows() == 72);
  CHECK(m3.cols() == 576);
}

TEST_CASE("d squared is zero") {
  std::vector<FiniteQuandle> qs{dihedral(5), dihedral(6), takasaki(make_group({3, 3})), core(heisenberg3())};
  for (const auto& q : qs)
    for (auto th : {Theory::Rack, Theory::Quandle})
      for (std::size_t k = 3; k <= 4; ++k) {
        if (q.size() > 9 && k == 4) continue;
        CHECK(boundary_matrix(q, k - 1, th).multiply(boundary_matrix(q, k, th)).is_zero());
      }
}

TEST_CASE("homology agrees with brute force on small quandles") {
  std::vector<FiniteQuandle> qs{dihedral(3), dihedral(4), trivial_quandle(2), takasaki(make_group({2, 2})),
                                dihedral(1)};
  for (const auto& q : qs)
    for (std::size_t k = 1; k <= 3; ++k)
      for (auto th : {Theory::Rack, Theory::Quandle}) {
        CAPTURE(q.size());
        CAPTURE(k);
        CHECK(homology(q, k, th) == naive_homology(q, k, th == Theory::Quandle));
      }
}

TEST_CASE("homology values") {
  CHECK(homology(takasaki(make_group({3, 3})), 2, Theory::Quandle) == HomologyGroup{0, {3}});
  CHECK(homology(dihedral(27), 2, Theory::Quandle).is_trivial());
  CHECK(homology(core(g4_27()), 2, Theory::Quandle) == HomologyGroup{0, {3}});
  CHECK(homology(core(heisenberg3()), 2, Theory::Quandle) == HomologyGroup{0, {3, 3, 3}});
  CHECK(homology(dihedral(5), 1, Theory::Quandle) == HomologyGroup{1, {}});
  CHECK(homology(dihedral(4), 2, Theory::Quandle).torsion == std::vector<std::int64_t>{2, 2});
  CHECK(HomologyGroup{2, {2, 2}}.to_string() == "Z^2 ⊕ Z_2 ⊕ Z_2");
  CHECK(HomologyGroup{}.to_string() == "0");
  CHECK(HomologyGroup{0, {3}}.to_string() == "Z_3");
  CHECK(HomologyGroup{1, {}}.to_string() == "Z");
}

TEST_CASE("first homology is free on the orbits") {
  for (const auto& spec : builtin_quandle_specs(27)) {
    CAPTURE(spec);
    const auto q = parse_quandle_spec(spec);
    const auto expect = oracle::orbits_bruteforce(q.size(), [&](std::size_t a, std::size_t b) { return q.op(a, b); });
    CHECK(homology(q, 1, Theory::Quandle) == HomologyGroup{expect.size(), {}});
  }
}

TEST_CASE("presentation path agrees with the generic path at every basepoint") {
  for (const auto& m : odd_abelian_up_to_27()) {
    const auto q = takasaki(make_group(m));
    const auto generic = homology(q, 2, Theory::Quandle);
    for (std::size_t a0 = 0; a0 < q.size(); ++a0) {
      CAPTURE(q.size());
      CAPTURE(a0);
      CHECK(h2_presentation_quasigroup(q, a0) == generic);
    }
  }
  const auto q = takasaki(make_group({5, 5}));
  CHECK(homology(q, 2, Theory::Quandle) == HomologyGroup{0, {5}});
  const auto q39 = takasaki(make_group({3, 9}));
  CHECK(h2_presentation_quasigroup(q39, 0) == HomologyGroup{0, {3}});
  CHECK(h2_presentation_quasigroup(takasaki(make_group({3, 3})), 0) == HomologyGroup{0, {3}});
  CHECK(h2_presentation_matrix(q, 0).rows() == 625);
  CHECK_THROWS_AS(h2_presentation_quasigroup(dihedral(4), 0), Error);
}

TEST_CASE("class_in_ext_square vanishes on boundaries and degenerate chains") {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{3, 3}, {5, 5}}) {
    const auto g = make_group(moduli);
    const auto q = takasaki(g);
    const auto zero = ext_zero(exterior_square(g));
    const auto n = static_cast<std::uint32_t>(q.size());
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) CHECK(class_in_ext_square(g, boundary(q, Tuple{a, b, c}, Theory::Rack)) == zero);
    for (std::uint32_t a = 0; a < n; ++a) {
      Chain ch(2);
      ch.add({a, a}, 1);
      CHECK(class_in_ext_square(g, ch) == zero);
      Chain z(2);
      z.add({0, a}, 1);
      CHECK(class_in_ext_square(g, z) == zero);
    }
  }
  const auto g = make_group({3, 3});
  Chain ch(2);
  ch.add({static_cast<std::uint32_t>(g.index_of(g.basis(0))), static_cast<std::uint32_t>(g.index_of(g.basis(1)))}, 1);
  CHECK(class_in_ext_square(g, ch) == ExtElem{2});
  CHECK_THROWS_AS(class_in_ext_square(make_group({4}), ch), Error);
}

TEST_CASE("wedge_to_cycle inverts class_in_ext_square") {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{3, 3}, {5}, {3, 9}}) {
    const auto g = make_group(moduli);
    const auto q = takasaki(g);
    const auto ext = exterior_square(g);
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) {
        const auto x = g.element(i), y = g.element(j);
        const auto c = wedge_to_cycle(g, x, y);
        CHECK(boundary(q, c, Theory::Quandle).is_zero());
        CHECK(class_in_ext_square(g, c) == wedge(g, ext, x, y));
      }
    const auto same = wedge_to_cycle(g, g.element(1), g.element(1));
    CHECK(same.project_quandle().is_zero());
  }
  const auto g = make_group({3, 3});
  CHECK(class_in_ext_square(g, wedge_to_cycle(g, g.basis(0), g.basis(1))) == ExtElem{1});
}

TEST_CASE("swapped wedge cycles cancel") {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{3, 3}, {5}}) {
    const auto g = make_group(moduli);
    const auto zero = ext_zero(exterior_square(g));
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) {
        const auto x = g.element(i), z = g.element(j);
        CHECK(class_in_ext_square(g, wedge_to_cycle(g, x, z) + wedge_to_cycle(g, z, x)) == zero);
      }
  }
}

TEST_CASE("second cohomology") {
  const auto t33 = takasaki(make_group({3, 3}));
  const auto c = cohomology2(t33, 3);
  CHECK(c.dimension == 1);
  REQUIRE(c.representatives.size() == 1);
  CHECK(c.representatives[0].size() == 9);
  CHECK(cohomology2_dim(dihedral(27), 3) == 0);
  CHECK(cohomology2_dim(t33, 5) == 0);
}

TEST_CASE("universal coefficients") {
  for (const auto& spec : builtin_quandle_specs(27)) {
    const auto q = parse_quandle_spec(spec);
    const auto h1 = homology(q, 1, Theory::Quandle);
    const auto h2 = homology(q, 2, Theory::Quandle);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      CAPTURE(spec);
      CAPTURE(p);
      const std::size_t expect = h2.free_rank + count_divisible(h2.torsion, p) + count_divisible(h1.torsion, p);
      CHECK(cohomology2_dim(q, p) == expect);
    }
  }
}

TEST_CASE("column budget") {
  Budget b;
  b.max_matrix_columns = 100;
  try {
    boundary_matrix(dihedral(7), 3, Theory::Rack, b);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}
