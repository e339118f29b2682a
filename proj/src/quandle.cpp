#include "qhom/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace qhom {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Takasaki: return "takasaki";
    case Provenance::Core: return "core";
    case Provenance::Dihedral: return "dihedral";
    case Provenance::Extension: return "extension";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Shape: return "shape";
    case Axiom::Idempotency: return "idempotency";
    case Axiom::RightInvertibility: return "right-invertibility";
    case Axiom::SelfDistributivity: return "self-distributivity";
  }
  return "unknown";
}

AxiomReport verify_axioms(const CandidateTable& table) {
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      return AxiomFailure{Axiom::Shape, {a}, "row " + std::to_string(a) + " has the wrong length"};
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] < 0 || static_cast<std::size_t>(table[a][b]) >= n) {
        return AxiomFailure{Axiom::Shape, {a, b}, "entry out of range"};
      }
    }
  }
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::size_t>(table[a][b]);

  for (std::size_t a = 0; a < n; ++a) {
    if (t[a * n + a] != a) {
      return AxiomFailure{Axiom::Idempotency, {a}, "a*a != a at a=" + std::to_string(a)};
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::size_t> seen(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t c = t[a * n + b];
      if (seen[c] != n) {
        return AxiomFailure{Axiom::RightInvertibility, {seen[c], a, b},
                            "column map a -> a*" + std::to_string(b) + " is not injective"};
      }
      seen[c] = a;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[t[a * n + c] * n + t[b * n + c]]) {
          return AxiomFailure{Axiom::SelfDistributivity, {a, b, c}, "(a*b)*c != (a*c)*(b*c)"};
        }
      }
    }
  }
  return std::monostate{};
}

FiniteQuandle FiniteQuandle::from_table(const CandidateTable& table, Provenance provenance,
                                        std::vector<std::string> labels) {
  const AxiomReport report = verify_axioms(table);
  if (const auto* f = std::get_if<AxiomFailure>(&report)) {
    std::string w;
    for (std::size_t x : f->witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorKind::Parse, std::string("not a quandle: ") + to_string(f->axiom) + " fails at (" + w + ")");
  }
  const std::size_t n = table.size();
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::Parse, "label count does not match quandle size");
  FiniteQuandle q;
  q.n_ = n;
  q.provenance_ = provenance;
  q.labels_ = std::move(labels);
  q.table_.resize(n * n);
  q.right_inverse_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = static_cast<std::uint32_t>(table[a][b]);
      q.table_[a * n + b] = c;
      q.right_inverse_[c * n + b] = static_cast<std::uint32_t>(a);
    }
  }
  std::vector<std::uint32_t> row_inverse(n * n);
  bool quasigroup = true;
  for (std::size_t a = 0; a < n && quasigroup; ++a) {
    std::vector<bool> hit(n);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t c = q.table_[a * n + b];
      if (hit[c]) {
        quasigroup = false;
        break;
      }
      hit[c] = true;
      row_inverse[a * n + c] = static_cast<std::uint32_t>(b);
    }
  }
  if (quasigroup) q.row_inverse_ = std::move(row_inverse);
  return q;
}

CandidateTable FiniteQuandle::table() const {
  CandidateTable t(n_, std::vector<std::int64_t>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = op(a, b);
  return t;
}

namespace {

FiniteQuandle takasaki_with(const FinAbGroup& g, Provenance provenance) {
  const std::size_t n = g.order();
  std::vector<GroupElem> elems;
  std::vector<std::string> labels;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(g.element(i));
    std::string s;
    for (std::size_t k = 0; k < elems.back().coords.size(); ++k) {
      s += (k ? "," : "") + std::to_string(elems.back().coords[k]);
    }
    labels.push_back(g.num_factors() == 1 ? s : "(" + s + ")");
  }
  CandidateTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = static_cast<std::int64_t>(g.index_of(g.sub(g.scale(2, elems[b]), elems[a])));
    }
  }
  return FiniteQuandle::from_table(t, provenance, std::move(labels));
}

}  // namespace

FiniteQuandle takasaki(const FinAbGroup& g) { return takasaki_with(g, Provenance::Takasaki); }

FiniteQuandle core(const FiniteGroup& g) {
  const std::size_t n = g.order();
  CandidateTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>(g.mul(g.mul(b, g.inv(a)), b));
  return FiniteQuandle::from_table(t, Provenance::Core, g.labels());
}

FiniteQuandle dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidModulus, "dihedral quandle needs n >= 1");
  if (n == 1) {
    return FiniteQuandle::from_table({{0}}, Provenance::Dihedral, {"0"});
  }
  return takasaki_with(FinAbGroup({static_cast<std::int64_t>(n)}), Provenance::Dihedral);
}

FiniteQuandle trivial_quandle(std::size_t n) {
  CandidateTable t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>(a);
  return FiniteQuandle::from_table(t, Provenance::Custom);
}

bool is_kei(const FiniteQuandle& q) {
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      if (q.op(q.op(a, b), b) != a) return false;
  return true;
}

bool is_quasigroup(const FiniteQuandle& q) { return q.quasigroup(); }

std::uint32_t left_divide(const FiniteQuandle& q, std::size_t c, std::size_t b) { return q.left_divide(c, b); }

std::uint32_t circ(const FiniteQuandle& q, std::size_t a, std::size_t c) {
  if (!q.quasigroup()) {
    throw Error(ErrorKind::NotAQuasigroup, "a o c is undefined: some row map of the quandle is not bijective");
  }
  return q.circ_unchecked(a, c);
}

std::vector<std::vector<std::size_t>> orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ra = find(a), rc = find(q.op(a, b));
      if (ra != rc) parent[std::max(ra, rc)] = std::min(ra, rc);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t r = find(a);
    if (block_of[r] == n) {
      block_of[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(a);
  }
  return blocks;
}

}  // namespace qhom
