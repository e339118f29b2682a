#include "qhom/cocycle.hpp"

#include "qhom/intlinalg.hpp"

namespace qhom {

class CocycleBuilder {
 public:
  static TwoCocycle build(const FiniteQuandle& q, std::int64_t m, std::vector<std::int64_t> values) {
    return TwoCocycle(q, m, std::move(values));
  }
};

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CocycleTable TwoCocycle::table() const {
  const std::size_t n = quandle_.size();
  CocycleTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (*this)(a, b);
  return t;
}

std::variant<TwoCocycle, CocycleFailure> validate(const FiniteQuandle& q, std::int64_t m, const CocycleTable& table) {
  using Kind = CocycleFailure::Kind;
  if (m < 2) return CocycleFailure{Kind::Shape, {}, "modulus must be at least 2"};
  const std::size_t n = q.size();
  if (table.size() != n) return CocycleFailure{Kind::Shape, {}, "table has the wrong number of rows"};
  std::vector<std::int64_t> v(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) return CocycleFailure{Kind::Shape, {a}, "row has the wrong length"};
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= m) return CocycleFailure{Kind::Shape, {a, b}, "value outside [0, m)"};
      v[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (v[a * n + a] != 0) return CocycleFailure{Kind::Diagonal, {a}, "phi(a,a) != 0"};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = q.op(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const std::int64_t s = v[a * n + c] + v[q.op(a, c) * n + q.op(b, c)] - v[a * n + b] - v[ab * n + c];
        if (mod(s, m) != 0) {
          return CocycleFailure{Kind::CocycleCondition, {a, b, c}, "cocycle condition fails"};
        }
      }
    }
  }
  return CocycleBuilder::build(q, m, std::move(v));
}

TwoCocycle make_cocycle(const FiniteQuandle& q, std::int64_t m, const CocycleTable& table) {
  auto r = validate(q, m, table);
  if (auto* f = std::get_if<CocycleFailure>(&r)) {
    std::string w;
    for (std::size_t x : f->witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorKind::InvalidCocycle, f->message + " at (" + w + ")");
  }
  return std::get<TwoCocycle>(std::move(r));
}

TwoCocycle zero_cocycle(const FiniteQuandle& q, std::int64_t m) {
  return make_cocycle(q, m, CocycleTable(q.size(), std::vector<std::int64_t>(q.size(), 0)));
}

TwoCocycle coboundary(const FiniteQuandle& q, std::int64_t m, const std::vector<std::int64_t>& psi) {
  if (psi.size() != q.size()) throw Error(ErrorKind::ElementMismatch, "1-cochain has the wrong length");
  CocycleTable t(q.size(), std::vector<std::int64_t>(q.size()));
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) t[a][b] = mod(psi[a] - psi[q.op(a, b)], m);
  return make_cocycle(q, m, t);
}

TwoCocycle add_scaled(const TwoCocycle& phi, std::int64_t k, const TwoCocycle& other) {
  if (!(phi.quandle() == other.quandle()) || phi.modulus() != other.modulus()) {
    throw Error(ErrorKind::ElementMismatch, "cocycles live on different quandles or moduli");
  }
  const std::int64_t m = phi.modulus();
  CocycleTable t = phi.table();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) t[a][b] = mod(t[a][b] + mod(k, m) * other(a, b), m);
  return make_cocycle(phi.quandle(), m, t);
}

std::optional<std::vector<std::int64_t>> is_coboundary(const TwoCocycle& phi) {
  const std::int64_t m = phi.modulus();
  if (m > UINT32_MAX || !is_prime(static_cast<std::uint64_t>(m))) {
    throw Error(ErrorKind::InvalidModulus, "coboundary test needs a prime modulus, got " + std::to_string(m));
  }
  const auto p = static_cast<std::uint32_t>(m);
  const FiniteQuandle& q = phi.quandle();
  const std::size_t n = q.size();
  // Unknowns psi_0..psi_{n-1}, s; equations psi(a) - psi(a*b) - s*phi(a,b) = 0.
  SparseIntMatrix eq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<SparseIntMatrix::Entry> col;
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = static_cast<std::uint32_t>(a * n + b);
      if (q.op(a, b) != a) col.push_back({r, 1});
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t b = 0; b < n; ++b) {
        if (q.op(c, b) == a && c != a) col.push_back({static_cast<std::uint32_t>(c * n + b), -1});
      }
    }
    eq.push_column(std::move(col));
  }
  std::vector<SparseIntMatrix::Entry> last;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (phi(a, b) != 0) last.push_back({static_cast<std::uint32_t>(a * n + b), -phi(a, b)});
  eq.push_column(std::move(last));

  for (const auto& v : nullspace_mod_p(eq, p)) {
    if (v[n] == 0) continue;
    const std::uint64_t inv = inverse_mod(v[n], p);
    std::vector<std::int64_t> psi(n);
    for (std::size_t a = 0; a < n; ++a) psi[a] = static_cast<std::int64_t>(inv * v[a] % p);
    return psi;
  }
  return std::nullopt;
}

TwoCocycle generator_cocycle(std::int64_t p, Normalization normalization) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorKind::InvalidModulus, std::to_string(p) + " is not an odd prime");
  }
  const FinAbGroup g({p, p});
  const FiniteQuandle q = takasaki(g);
  const std::int64_t scale = normalization == Normalization::Plain ? 2 : 1;
  const std::size_t n = g.order();
  CocycleTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const GroupElem x = g.element(a);
    for (std::size_t b = 0; b < n; ++b) {
      const GroupElem y = g.element(b);
      t[a][b] = mod(scale * (x.coords[0] * y.coords[1] - x.coords[1] * y.coords[0]), p);
    }
  }
  return make_cocycle(q, p, t);
}

FiniteQuandle central_extension(const TwoCocycle& phi) {
  const FiniteQuandle& q = phi.quandle();
  const std::size_t n = q.size();
  const auto m = static_cast<std::size_t>(phi.modulus());
  CandidateTable t(n * m, std::vector<std::int64_t>(n * m));
  std::vector<std::string> labels;
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t a1 = 0; a1 < m; ++a1) {
      const std::string base = q.labels().empty() ? std::to_string(x1) : q.labels()[x1];
      labels.push_back("(" + base + ";" + std::to_string(a1) + ")");
      for (std::size_t x2 = 0; x2 < n; ++x2) {
        const std::size_t a = (a1 + static_cast<std::size_t>(phi(x1, x2))) % m;
        for (std::size_t a2 = 0; a2 < m; ++a2) {
          t[x1 * m + a1][x2 * m + a2] = static_cast<std::int64_t>(q.op(x1, x2) * m + a);
        }
      }
    }
  }
  return FiniteQuandle::from_table(t, Provenance::Extension, std::move(labels));
}

bool is_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.size();
  if (b.size() != n || perm.size() != n) return false;
  std::vector<bool> hit(n);
  for (std::size_t x : perm) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (perm[a.op(x, y)] != b.op(perm[x], perm[y])) return false;
  return true;
}

}  // namespace qhom
