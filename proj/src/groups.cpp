#include "qhom/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhom {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli, std::size_t max_order)
    : moduli_(std::move(moduli)) {
  for (std::int64_t m : moduli_) {
    if (m < 2) {
      throw Error(ErrorKind::InvalidModulus, "group modulus " + std::to_string(m) + " is below 2");
    }
    std::size_t next = 0;
    if (__builtin_mul_overflow(order_, static_cast<std::size_t>(m), &next) || next > max_order) {
      throw Error(ErrorKind::ResourceLimit,
                  "group order exceeds the configured cap of " + std::to_string(max_order));
    }
    order_ = next;
  }
}

bool FinAbGroup::all_odd() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](std::int64_t m) { return m % 2 != 0; });
}

void FinAbGroup::check(const GroupElem& a) const {
  if (a.coords.size() != moduli_.size()) {
    throw Error(ErrorKind::ElementMismatch, "element has " + std::to_string(a.coords.size()) +
                                                " coordinates, group has " +
                                                std::to_string(moduli_.size()) + " factors");
  }
}

GroupElem FinAbGroup::zero() const { return GroupElem{std::vector<std::int64_t>(moduli_.size(), 0)}; }

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
  check(a);
  check(b);
  GroupElem r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = mod(a.coords[i] + b.coords[i], moduli_[i]);
  return r;
}

GroupElem FinAbGroup::sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }

GroupElem FinAbGroup::neg(const GroupElem& a) const {
  check(a);
  GroupElem r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = mod(-a.coords[i], moduli_[i]);
  return r;
}

GroupElem FinAbGroup::scale(std::int64_t k, const GroupElem& a) const {
  check(a);
  GroupElem r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.coords[i] = mod(mod(k, moduli_[i]) * a.coords[i], moduli_[i]);
  }
  return r;
}

GroupElem FinAbGroup::halve(const GroupElem& a) const {
  check(a);
  if (!all_odd()) throw Error(ErrorKind::NotOddOrder, "halving needs every modulus odd, got " + to_string());
  GroupElem r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t inv2 = (moduli_[i] + 1) / 2;
    r.coords[i] = mod(a.coords[i] * inv2, moduli_[i]);
  }
  return r;
}

GroupElem FinAbGroup::basis(std::size_t i) const {
  if (i >= moduli_.size()) throw Error(ErrorKind::ElementMismatch, "basis index out of range");
  GroupElem r = zero();
  r.coords[i] = 1;
  return r;
}

GroupElem FinAbGroup::element(std::size_t index) const {
  if (index >= order_) throw Error(ErrorKind::ElementMismatch, "element index out of range");
  GroupElem r = zero();
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    r.coords[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return r;
}

std::size_t FinAbGroup::index_of(const GroupElem& a) const {
  check(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= moduli_[i]) {
      throw Error(ErrorKind::ElementMismatch, "coordinate not reduced");
    }
    idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(a.coords[i]);
  }
  return idx;
}

GroupElem FinAbGroup::make(std::vector<std::int64_t> coords) const {
  GroupElem r{std::move(coords)};
  check(r);
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = mod(r.coords[i], moduli_[i]);
  return r;
}

std::string FinAbGroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) os << (i ? " ⊕ " : "") << "Z_" << moduli_[i];
  return os.str();
}

FinAbGroup make_group(const std::vector<std::int64_t>& moduli) { return FinAbGroup(moduli); }

std::size_t ExtSquare::order() const {
  std::size_t n = 1;
  for (const auto& c : components) n *= static_cast<std::size_t>(c.modulus);
  return n;
}

std::vector<std::int64_t> ExtSquare::moduli() const {
  std::vector<std::int64_t> out;
  for (const auto& c : components) out.push_back(c.modulus);
  return out;
}

ExtSquare exterior_square(const FinAbGroup& g) {
  ExtSquare ext;
  const auto& m = g.moduli();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const std::int64_t d = std::gcd(m[i], m[j]);
      if (d > 1) ext.components.push_back({i, j, d});
    }
  }
  return ext;
}

ExtElem ext_zero(const ExtSquare& ext) { return ExtElem(ext.components.size(), 0); }

ExtElem ext_add(const ExtSquare& ext, const ExtElem& a, const ExtElem& b) {
  ExtElem r(ext.components.size());
  for (std::size_t c = 0; c < r.size(); ++c) r[c] = mod(a[c] + b[c], ext.components[c].modulus);
  return r;
}

ExtElem ext_scale(const ExtSquare& ext, std::int64_t k, const ExtElem& a) {
  ExtElem r(ext.components.size());
  for (std::size_t c = 0; c < r.size(); ++c) {
    const std::int64_t d = ext.components[c].modulus;
    r[c] = mod(mod(k, d) * a[c], d);
  }
  return r;
}

std::vector<ExtElem> ext_elements(const ExtSquare& ext) {
  std::vector<ExtElem> out;
  ExtElem cur = ext_zero(ext);
  const std::size_t total = ext.order();
  out.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    out.push_back(cur);
    for (std::size_t c = cur.size(); c-- > 0;) {
      if (++cur[c] < ext.components[c].modulus) break;
      cur[c] = 0;
    }
  }
  return out;
}

ExtElem wedge(const FinAbGroup& g, const ExtSquare& ext, const GroupElem& x, const GroupElem& y) {
  if (x.coords.size() != g.num_factors() || y.coords.size() != g.num_factors()) {
    throw Error(ErrorKind::ElementMismatch, "wedge arguments do not belong to " + g.to_string());
  }
  ExtElem r(ext.components.size());
  for (std::size_t c = 0; c < r.size(); ++c) {
    const auto& comp = ext.components[c];
    const std::int64_t v = x.coords[comp.i] * y.coords[comp.j] - x.coords[comp.j] * y.coords[comp.i];
    r[c] = mod(v, comp.modulus);
  }
  return r;
}

ExtElem wedge(const FinAbGroup& g, const GroupElem& x, const GroupElem& y) {
  return wedge(g, exterior_square(g), x, y);
}

// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_mult_table(const Table& mult, std::vector<std::string> labels) {
  const std::size_t n = mult.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty multiplication table");
  FiniteGroup g;
  g.n_ = n;
  g.mult_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[a].size() != n) {
      throw Error(ErrorKind::NotAGroup, "row " + std::to_string(a) + " has length " +
                                            std::to_string(mult[a].size()) + ", expected " +
                                            std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a][b] >= n) throw Error(ErrorKind::NotAGroup, "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g.mult_[a * n + b] = mult[a][b];
    }
  }
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::NotAGroup, "label count does not match order");
  g.labels_ = std::move(labels);

  // identity
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.id_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NotAGroup, "no two-sided identity");

  g.inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] == n) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[g.mul(a, b)] || col[g.mul(b, a)]) {
        throw Error(ErrorKind::NotAGroup, "row/column " + std::to_string(a) + " is not a permutation");
      }
      row[g.mul(a, b)] = col[g.mul(b, a)] = true;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.mul(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return g;
}

std::size_t FiniteGroup::pow(std::size_t a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  std::size_t r = id_;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup::Table FiniteGroup::table() const {
  Table t(n_, std::vector<std::size_t>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidModulus, "cyclic group needs n >= 1");
  FiniteGroup::Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_mult_table(t, std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  FiniteGroup::Table t(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na * nb; ++x) {
    const std::string la = a.labels().empty() ? std::to_string(x / nb) : a.labels()[x / nb];
    const std::string lb = b.labels().empty() ? std::to_string(x % nb) : b.labels()[x % nb];
    labels.push_back("(" + la + "," + lb + ")");
    for (std::size_t y = 0; y < na * nb; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup::from_mult_table(t, std::move(labels));
}

FiniteGroup from_abelian(const FinAbGroup& g) {
  const std::size_t n = g.order();
  std::vector<GroupElem> elems;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(g.element(i));
    std::string s = "(";
    for (std::size_t k = 0; k < elems.back().coords.size(); ++k) {
      s += (k ? "," : "") + std::to_string(elems.back().coords[k]);
    }
    labels.push_back(s + ")");
  }
  FiniteGroup::Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.index_of(g.add(elems[a], elems[b]));
  return FiniteGroup::from_mult_table(t, std::move(labels));
}

FiniteGroup heisenberg3() {
  auto idx = [](std::size_t a, std::size_t b, std::size_t c) { return 9 * a + 3 * b + c; };
  FiniteGroup::Table t(27, std::vector<std::size_t>(27));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < 27; ++x) {
    const std::size_t a = x / 9, b = (x / 3) % 3, c = x % 3;
    labels.push_back("[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]");
    for (std::size_t y = 0; y < 27; ++y) {
      const std::size_t a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
      t[x][y] = idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    }
  }
  return FiniteGroup::from_mult_table(t, std::move(labels));
}

FiniteGroup g4_27() {
  static constexpr std::size_t pow4[3] = {1, 4, 7};  // 4^j mod 9
  FiniteGroup::Table t(27, std::vector<std::size_t>(27));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < 27; ++x) {
    const std::size_t i = x / 3, j = x % 3;
    labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t y = 0; y < 27; ++y) {
      const std::size_t k = y / 3, l = y % 3;
      t[x][y] = 3 * ((i + k * pow4[j]) % 9) + (j + l) % 3;
    }
  }
  return FiniteGroup::from_mult_table(t, std::move(labels));
}

G4Generators g4_27_generators() {
  // s = (1,0), t = (0,2)
  return {3 * 1 + 0, 3 * 0 + 2};
}

HeisenbergGenerators heisenberg3_generators() {
  // x = [0,0,1] (central), y = [1,0,0], z = [0,1,0].
  return {1, 9, 3};
}

}  // namespace qhom
