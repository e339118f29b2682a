#include "qhom/homology.hpp"

#include <algorithm>
#include <sstream>

namespace qhom {

const char* to_string(Theory t) { return t == Theory::Rack ? "rack" : "quandle"; }

ChainBasis::ChainBasis(std::size_t quandle_size, std::size_t degree, Theory theory)
    : n_(quandle_size), degree_(degree), theory_(theory) {
  size_ = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    const std::size_t choices = (theory == Theory::Quandle && i > 0) ? (n_ == 0 ? 0 : n_ - 1) : n_;
    if (choices != 0 && size_ > SIZE_MAX / choices) {
      throw Error(ErrorKind::ResourceLimit, "chain group dimension overflows");
    }
    size_ *= choices;
  }
}

Tuple ChainBasis::tuple(std::size_t index) const {
  Tuple t(degree_);
  if (theory_ == Theory::Rack) {
    for (std::size_t i = degree_; i-- > 0;) {
      t[i] = static_cast<std::uint32_t>(index % n_);
      index /= n_;
    }
    return t;
  }
  // digits: d_0 in [0,n), d_i in [0,n-1) for i > 0; x_i skips x_{i-1}
  std::vector<std::size_t> digit(degree_);
  for (std::size_t i = degree_; i-- > 1;) {
    digit[i] = index % (n_ - 1);
    index /= (n_ - 1);
  }
  if (degree_ > 0) digit[0] = index;
  for (std::size_t i = 0; i < degree_; ++i) {
    std::size_t x = digit[i];
    if (i > 0 && x >= t[i - 1]) ++x;
    t[i] = static_cast<std::uint32_t>(x);
  }
  return t;
}

std::size_t ChainBasis::index_of(const Tuple& t) const {
  if (t.size() != degree_) throw Error(ErrorKind::ElementMismatch, "tuple has the wrong degree");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (t[i] >= n_) throw Error(ErrorKind::ElementMismatch, "tuple entry out of range");
    if (theory_ == Theory::Rack || i == 0) {
      idx = idx * n_ + t[i];
    } else {
      if (t[i] == t[i - 1]) return size_;
      idx = idx * (n_ - 1) + (t[i] > t[i - 1] ? t[i] - 1 : t[i]);
    }
  }
  return idx;
}

bool ChainBasis::contains(const Tuple& t) const { return index_of(t) != size_; }

bool is_degenerate(const Tuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return true;
  return false;
}

void Chain::add(const Tuple& t, std::int64_t coeff) {
  if (t.size() != degree_) throw Error(ErrorKind::ElementMismatch, "tuple degree does not match chain degree");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, coeff, &it->second)) throw OverflowError();
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Chain::coeff(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

Chain Chain::project_quandle() const {
  Chain out(degree_);
  for (const auto& [t, c] : terms_)
    if (!is_degenerate(t)) out.terms_.emplace(t, c);
  return out;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.degree_ != degree_ && !other.is_zero()) throw Error(ErrorKind::ElementMismatch, "chain degrees differ");
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.degree_ != degree_ && !other.is_zero()) throw Error(ErrorKind::ElementMismatch, "chain degrees differ");
  for (const auto& [t, c] : other.terms_) {
    if (c == INT64_MIN) throw OverflowError();
    add(t, -c);
  }
  return *this;
}

Chain operator*(std::int64_t k, const Chain& c) {
  Chain out(c.degree_);
  for (const auto& [t, v] : c.terms_) {
    std::int64_t prod;
    if (__builtin_mul_overflow(k, v, &prod)) throw OverflowError();
    out.add(t, prod);
  }
  return out;
}

namespace {

// Emits the 2(n-1) signed faces of d(tuple) before degenerate projection.
template <class Emit>
void for_each_face(const FiniteQuandle& q, const Tuple& x, Tuple& scratch, Emit&& emit) {
  const std::size_t n = x.size();
  if (n < 2) return;
  scratch.resize(n - 1);
  for (std::size_t i = 1; i < n; ++i) {  // 0-based position; x_{i+1} in the formula
    const int sign = (i % 2 == 1) ? 1 : -1;  // (-1)^(i+1)
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) scratch[k++] = x[j];
    emit(scratch, sign);
    k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      scratch[k++] = j < i ? q.op(x[j], x[i]) : x[j];
    }
    emit(scratch, -sign);
  }
}

}  // namespace

Chain boundary(const FiniteQuandle& q, const Tuple& tuple, Theory theory) {
  const std::size_t n = tuple.size();
  if (n == 0) throw Error(ErrorKind::ElementMismatch, "boundary of a 0-tuple");
  for (std::uint32_t x : tuple)
    if (x >= q.size()) throw Error(ErrorKind::ElementMismatch, "tuple entry out of range");
  Chain out(n - 1);
  Tuple scratch;
  for_each_face(q, tuple, scratch, [&](const Tuple& face, int sign) {
    if (theory == Theory::Quandle && is_degenerate(face)) return;
    out.add(face, sign);
  });
  return out;
}

Chain boundary(const FiniteQuandle& q, const Chain& chain, Theory theory) {
  Chain out(chain.degree() == 0 ? 0 : chain.degree() - 1);
  for (const auto& [t, c] : chain.terms()) out += c * boundary(q, t, theory);
  return out;
}

SparseIntMatrix boundary_matrix(const FiniteQuandle& q, std::size_t degree, Theory theory, const Budget& budget) {
  if (degree < 1) throw Error(ErrorKind::ElementMismatch, "boundary matrix needs degree >= 1");
  const ChainBasis cols(q.size(), degree, theory);
  const ChainBasis rows(q.size(), degree - 1, theory);
  if (cols.size() > budget.max_matrix_columns) {
    throw Error(ErrorKind::ResourceLimit, "C_" + std::to_string(degree) + " has " + std::to_string(cols.size()) +
                                              " basis tuples, over the budget of " +
                                              std::to_string(budget.max_matrix_columns));
  }
  if (rows.size() > UINT32_MAX) throw Error(ErrorKind::ResourceLimit, "row dimension exceeds 32-bit indexing");
  SparseIntMatrix m(rows.size(), 0);
  Tuple scratch;
  std::vector<SparseIntMatrix::Entry> col;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    col.clear();
    if (degree >= 2) {
      const Tuple t = cols.tuple(c);
      for_each_face(q, t, scratch, [&](const Tuple& face, int sign) {
        const std::size_t r = rows.index_of(face);
        if (r == rows.size()) return;  // degenerate, quandle theory
        col.push_back({static_cast<std::uint32_t>(r), sign});
      });
    }
    m.push_column(col);
  }
  return m;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (std::int64_t d : torsion) {
    os << (first ? "" : " ⊕ ") << "Z_" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::int64_t> torsion_of(const SmithResult& s) {
  std::vector<std::int64_t> t;
  for (std::int64_t d : s.invariant_factors)
    if (d > 1) t.push_back(d);
  return t;
}

HomologyGroup homology(const FiniteQuandle& q, std::size_t degree, Theory theory, const Budget& budget) {
  if (degree < 1) throw Error(ErrorKind::ElementMismatch, "homology degree must be >= 1");
  const std::size_t dim = ChainBasis(q.size(), degree, theory).size();
  const std::size_t rank_in = degree == 1 ? 0 : integer_rank(boundary_matrix(q, degree, theory, budget), budget);
  const SmithResult out = smith(boundary_matrix(q, degree + 1, theory, budget), budget);
  HomologyGroup h;
  h.free_rank = dim - rank_in - out.rank;
  h.torsion = torsion_of(out);
  return h;
}

SparseIntMatrix h2_presentation_matrix(const FiniteQuandle& q, std::size_t basepoint) {
  if (!q.quasigroup()) throw Error(ErrorKind::NotAQuasigroup, "bracket presentation needs a quasigroup quandle");
  const std::size_t n = q.size();
  if (basepoint >= n) throw Error(ErrorKind::ElementMismatch, "basepoint out of range");
  auto gen = [n](std::size_t x, std::size_t z) { return static_cast<std::uint32_t>(x * n + z); };
  SparseIntMatrix m(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) m.push_column({{gen(x, x), 1}});
  for (std::size_t x = 0; x < n; ++x) m.push_column({{gen(basepoint, x), 1}});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t zp = q.left_divide(y, q.circ_unchecked(x, z));
        m.push_column({{gen(x, z), 1}, {gen(z, y), 1}, {gen(x, zp), -1}, {gen(zp, y), -1}});
      }
    }
  }
  return m;
}

HomologyGroup h2_presentation_quasigroup(const FiniteQuandle& q, std::size_t basepoint, const Budget& budget) {
  const SparseIntMatrix rel = h2_presentation_matrix(q, basepoint);
  const SmithResult s = smith(rel, budget);
  return HomologyGroup{rel.rows() - s.rank, torsion_of(s)};
}

namespace {

void require_odd(const FinAbGroup& g) {
  if (!g.all_odd()) throw Error(ErrorKind::NotOddOrder, g.to_string() + " has an even modulus");
}

}  // namespace

ExtElem class_in_ext_square(const FinAbGroup& g, const Chain& chain) {
  require_odd(g);
  if (chain.degree() != 2 && !chain.is_zero()) throw Error(ErrorKind::ElementMismatch, "expected a 2-chain");
  const ExtSquare ext = exterior_square(g);
  ExtElem acc = ext_zero(ext);
  for (const auto& [t, c] : chain.terms()) {
    if (t[0] >= g.order() || t[1] >= g.order()) throw Error(ErrorKind::ElementMismatch, "chain is not over T(G)");
    const GroupElem a = g.element(t[0]);
    const GroupElem b = g.element(t[1]);
    const GroupElem ab = g.sub(g.scale(2, b), a);
    acc = ext_add(ext, acc, ext_scale(ext, c, wedge(g, ext, a, ab)));
  }
  return acc;
}

Chain wedge_to_cycle(const FinAbGroup& g, const GroupElem& x, const GroupElem& y) {
  require_odd(g);
  auto idx = [&](const GroupElem& e) { return static_cast<std::uint32_t>(g.index_of(e)); };
  const std::uint32_t zero = idx(g.zero());
  Chain c(2);
  c.add({idx(x), idx(g.halve(g.add(x, y)))}, 1);
  c.add({zero, idx(g.halve(y))}, -1);
  c.add({zero, idx(g.halve(x))}, 1);
  return c.project_quandle();
}

Cohomology2 cohomology2(const FiniteQuandle& q, std::uint32_t p, const Budget& budget) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidModulus, std::to_string(p) + " is not prime");
  const std::size_t n = q.size();
  const ChainBasis c2(n, 2, Theory::Quandle);
  const SparseIntMatrix d2 = boundary_matrix(q, 2, Theory::Quandle, budget);
  const SparseIntMatrix d3 = boundary_matrix(q, 3, Theory::Quandle, budget);

  const auto cocycles = nullspace_mod_p(d3.transpose(), p);

  ModpEchelon span(c2.size(), p);
  const SparseIntMatrix d2t = d2.transpose();  // columns = rows of d2 = delta(e_a)
  for (std::size_t a = 0; a < d2t.cols(); ++a) {
    ModpEchelon::SparseVec v;
    auto [b, e] = d2t.column(a);
    for (auto it = b; it != e; ++it) {
      const std::int64_t r = it->value % static_cast<std::int64_t>(p);
      v.emplace_back(it->row, static_cast<std::uint32_t>(r < 0 ? r + p : r));
    }
    span.insert(std::move(v));
  }

  Cohomology2 out;
  out.p = p;
  for (const auto& z : cocycles) {
    ModpEchelon::SparseVec v;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] != 0) v.emplace_back(static_cast<std::uint32_t>(i), z[i]);
    if (!span.insert(v)) continue;
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Tuple t = c2.tuple(i);
      table[t[0]][t[1]] = z[i];
    }
    out.representatives.push_back(std::move(table));
  }
  out.dimension = out.representatives.size();
  return out;
}

std::size_t cohomology2_dim(const FiniteQuandle& q, std::uint32_t p, const Budget& budget) {
  return cohomology2(q, p, budget).dimension;
}

}  // namespace qhom
