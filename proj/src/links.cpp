#include "qhom/links.hpp"

#include <algorithm>
#include <map>

namespace qhom {

VirtualLinkDiagram VirtualLinkDiagram::from_components(std::vector<std::vector<Pass>> components) {
  if (components.empty()) components.emplace_back();
  struct Seen {
    int overs = 0;
    int unders = 0;
    int sign = 0;
  };
  std::map<std::uint32_t, Seen> seen;
  for (const auto& comp : components) {
    for (const Pass& p : comp) {
      if (p.crossing == 0) throw Error(ErrorKind::Parse, "crossing labels start at 1");
      if (p.sign != 1 && p.sign != -1) throw Error(ErrorKind::Parse, "crossing sign must be + or -");
      Seen& s = seen[p.crossing];
      (p.over ? s.overs : s.unders) += 1;
      if (s.sign != 0 && s.sign != p.sign) {
        throw Error(ErrorKind::Parse, "crossing " + std::to_string(p.crossing) + " has passes of different sign");
      }
      s.sign = p.sign;
    }
  }
  for (const auto& [label, s] : seen) {
    if (s.overs != 1 || s.unders != 1) {
      throw Error(ErrorKind::Parse, "crossing " + std::to_string(label) + " needs exactly one O and one U pass");
    }
  }

  VirtualLinkDiagram d;
  d.components_ = std::move(components);
  std::map<std::uint32_t, Crossing> xs;
  for (const auto& comp : d.components_) {
    std::vector<std::size_t> unders;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (!comp[i].over) unders.push_back(i);
    const std::size_t base = d.num_arcs_;
    const std::size_t k = unders.size();
    d.num_arcs_ += std::max<std::size_t>(k, 1);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      Crossing& x = xs[comp[i].crossing];
      x.label = comp[i].crossing;
      x.sign = comp[i].sign;
      // number of under-passes strictly before position i
      const std::size_t before = static_cast<std::size_t>(
          std::lower_bound(unders.begin(), unders.end(), i) - unders.begin());
      if (comp[i].over) {
        x.over_arc = k == 0 ? base : base + (before == 0 ? k - 1 : before - 1);
      } else {
        x.in_arc = base + (before == 0 ? k - 1 : before - 1);
        x.out_arc = base + before;
      }
    }
  }
  for (auto& [label, x] : xs) d.crossings_.push_back(x);
  return d;
}

std::string VirtualLinkDiagram::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) out += " / ";
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const Pass& p = components_[c][i];
      if (i) out += ' ';
      out += p.over ? 'O' : 'U';
      out += std::to_string(p.crossing);
      out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

VirtualLinkDiagram parse_gauss(std::string_view text) {
  std::vector<std::vector<Pass>> comps(1);
  std::size_t i = 0;
  auto fail = [&](std::size_t pos, const std::string& what) -> void {
    throw Error(ErrorKind::Parse, what + " at byte " + std::to_string(pos));
  };
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  while (i < text.size()) {
    const char ch = text[i];
    if (is_space(ch)) {
      ++i;
      continue;
    }
    if (ch == '/') {
      comps.emplace_back();
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ch != 'O' && ch != 'U' && ch != 'o' && ch != 'u') fail(i, "expected O, U or /");
    Pass p{};
    p.over = (ch == 'O' || ch == 'o');
    ++i;
    std::uint64_t label = 0;
    const std::size_t digits_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      label = label * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (label > UINT32_MAX) fail(digits_start, "crossing label too large");
      ++i;
    }
    if (i == digits_start) fail(i, "expected a crossing number");
    if (label == 0) fail(digits_start, "crossing labels start at 1");
    p.crossing = static_cast<std::uint32_t>(label);
    if (i < text.size() && text[i] == '+') {
      p.sign = 1;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      p.sign = -1;
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {
      p.sign = -1;
      i += 3;
    } else {
      fail(i, "expected sign + or -");
    }
    if (i < text.size() && !is_space(text[i]) && text[i] != '/') fail(i, "unexpected character after pass");
    (void)start;
    comps.back().push_back(p);
  }
  return VirtualLinkDiagram::from_components(std::move(comps));
}

bool is_coloring(const VirtualLinkDiagram& d, const FiniteQuandle& q, const Coloring& c) {
  if (c.size() != d.num_arcs()) return false;
  for (std::uint32_t x : c)
    if (x >= q.size()) return false;
  for (const auto& x : d.crossings()) {
    const bool ok = x.sign > 0 ? q.op(c[x.in_arc], c[x.over_arc]) == c[x.out_arc]
                               : q.op(c[x.out_arc], c[x.over_arc]) == c[x.in_arc];
    if (!ok) return false;
  }
  return true;
}

void for_each_coloring(const VirtualLinkDiagram& d, const FiniteQuandle& q,
                       const std::function<bool(const Coloring&)>& visit) {
  const std::size_t arcs = d.num_arcs();
  const std::size_t n = q.size();
  if (n == 0) return;
  // crossings become checkable once their highest arc is assigned
  std::vector<std::vector<const VirtualLinkDiagram::Crossing*>> checks(arcs);
  for (const auto& x : d.crossings()) checks[std::max({x.over_arc, x.in_arc, x.out_arc})].push_back(&x);

  Coloring c(arcs, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == arcs) return visit(c);
    for (std::uint32_t v = 0; v < n; ++v) {
      c[pos] = v;
      bool ok = true;
      for (const auto* x : checks[pos]) {
        ok = x->sign > 0 ? q.op(c[x->in_arc], c[x->over_arc]) == c[x->out_arc]
                         : q.op(c[x->out_arc], c[x->over_arc]) == c[x->in_arc];
        if (!ok) break;
      }
      if (ok && !extend(pos + 1)) return false;
    }
    return true;
  };
  extend(0);
}

std::vector<Coloring> colorings(const VirtualLinkDiagram& d, const FiniteQuandle& q) {
  std::vector<Coloring> out;
  for_each_coloring(d, q, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Chain two_chain(const VirtualLinkDiagram& d, const Coloring& c, const FiniteQuandle& q) {
  if (!is_coloring(d, q, c)) throw Error(ErrorKind::ElementMismatch, "not a valid colouring of the diagram");
  Chain out(2);
  for (const auto& x : d.crossings()) {
    if (x.sign > 0) {
      out.add({c[x.in_arc], c[x.over_arc]}, 1);
    } else {
      out.add({c[x.out_arc], c[x.over_arc]}, -1);
    }
  }
  return out;
}

StateSum state_sum(const VirtualLinkDiagram& d, const TwoCocycle& phi) {
  const auto m = static_cast<std::size_t>(phi.modulus());
  StateSum s;
  s.counts.assign(m, 0);
  for_each_coloring(d, phi.quandle(), [&](const Coloring& c) {
    std::int64_t w = 0;
    for (const auto& x : d.crossings()) {
      w += x.sign > 0 ? phi(c[x.in_arc], c[x.over_arc]) : -phi(c[x.out_arc], c[x.over_arc]);
    }
    const std::int64_t r = w % phi.modulus();
    ++s.counts[static_cast<std::size_t>(r < 0 ? r + phi.modulus() : r)];
    ++s.colorings;
    return true;
  });
  return s;
}

ExtElem diagram_class(const VirtualLinkDiagram& d, const Coloring& c, const FinAbGroup& g) {
  return class_in_ext_square(g, two_chain(d, c, takasaki(g)));
}

namespace {

void enumerate_codes(std::size_t crossings, std::vector<std::string>& out) {
  const std::size_t len = 2 * crossings;
  // label sequence in first-appearance order, each label used twice
  std::vector<std::uint32_t> seq(len);
  std::vector<int> uses(crossings + 1, 0);
  std::vector<std::vector<std::uint32_t>> sequences;
  std::function<void(std::size_t, std::uint32_t)> place = [&](std::size_t pos, std::uint32_t next) {
    if (pos == len) {
      sequences.push_back(seq);
      return;
    }
    for (std::uint32_t k = 1; k < next; ++k) {
      if (uses[k] == 1) {
        seq[pos] = k;
        uses[k] = 2;
        place(pos + 1, next);
        uses[k] = 1;
      }
    }
    if (next <= crossings) {
      seq[pos] = next;
      uses[next] = 1;
      place(pos + 1, next + 1);
      uses[next] = 0;
    }
  };
  place(0, 1);

  for (const auto& s : sequences) {
    for (std::uint32_t over_first = 0; over_first < (1u << crossings); ++over_first) {
      for (std::uint32_t negative = 0; negative < (1u << crossings); ++negative) {
        std::vector<Pass> passes(len);
        std::vector<bool> first(crossings + 1, true);
        for (std::size_t i = 0; i < len; ++i) {
          const std::uint32_t k = s[i];
          const bool is_first = first[k];
          first[k] = false;
          const bool of = (over_first >> (k - 1)) & 1u;
          passes[i] = {k, is_first ? of : !of, ((negative >> (k - 1)) & 1u) ? -1 : 1};
        }
        // cut points between components: bit i set = break after position i
        for (std::uint32_t cuts = 0; cuts < (1u << (len - 1)); ++cuts) {
          std::vector<std::vector<Pass>> comps(1);
          for (std::size_t i = 0; i < len; ++i) {
            comps.back().push_back(passes[i]);
            if (i + 1 < len && ((cuts >> i) & 1u)) comps.emplace_back();
          }
          out.push_back(VirtualLinkDiagram::from_components(std::move(comps)).to_string());
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> canonical_gauss_codes(std::size_t crossings) {
  if (crossings == 0) return {""};
  if (crossings > 9) throw Error(ErrorKind::ResourceLimit, "canonical code enumeration is limited to 9 crossings");
  std::vector<std::string> out;
  enumerate_codes(crossings, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qhom
