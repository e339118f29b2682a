#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/cocycle.hpp"
#include "qhom/groups.hpp"
#include "qhom/homology.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

struct Pass {
  std::uint32_t crossing;  // label as written in the code
  bool over;
  int sign;  // +1 or -1
  friend bool operator==(const Pass&, const Pass&) = default;
};

// Signed Gauss code of a (possibly virtual) link diagram. Arcs run between
// consecutive under-passes; on each component they are numbered starting
// with the arc that leaves the first under-pass, and a component without
// under-passes is a single arc.
class VirtualLinkDiagram {
 public:
  struct Crossing {
    std::uint32_t label;
    int sign;
    std::size_t over_arc;
    std::size_t in_arc;   // under-arc entering the crossing
    std::size_t out_arc;  // under-arc leaving the crossing
  };

  static VirtualLinkDiagram from_components(std::vector<std::vector<Pass>> components);

  const std::vector<std::vector<Pass>>& components() const { return components_; }
  // Sorted by label.
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t num_arcs() const { return num_arcs_; }
  std::string to_string() const;

 private:
  std::vector<std::vector<Pass>> components_;
  std::vector<Crossing> crossings_;
  std::size_t num_arcs_ = 0;
};

// Whitespace-separated passes O<k><s> / U<k><s>, k >= 1, s in {+, -}
// (U+2212 accepted for -); '/' separates components; an empty component is
// a crossingless unknot. Throws Error(Parse) with the byte offset.
VirtualLinkDiagram parse_gauss(std::string_view text);

using Coloring = std::vector<std::uint32_t>;  // arc -> quandle element

// At every crossing with over colour y: out = in * y when positive and
// in = out * y (out = in *bar y) when negative.
bool is_coloring(const VirtualLinkDiagram& d, const FiniteQuandle& q, const Coloring& c);

// Visits all colourings in lexicographic order of the arc assignment;
// the visitor returns false to stop early.
void for_each_coloring(const VirtualLinkDiagram& d, const FiniteQuandle& q,
                       const std::function<bool(const Coloring&)>& visit);
std::vector<Coloring> colorings(const VirtualLinkDiagram& d, const FiniteQuandle& q);

// Sum over crossings of +(in, over) at positive and -(out, over) at
// negative crossings (unprojected; project_quandle() drops degenerate pairs).
Chain two_chain(const VirtualLinkDiagram& d, const Coloring& c, const FiniteQuandle& q);

struct StateSum {
  std::size_t colorings = 0;
  std::vector<std::size_t> counts;  // counts[v] = colourings of total weight v
};

StateSum state_sum(const VirtualLinkDiagram& d, const TwoCocycle& phi);

ExtElem diagram_class(const VirtualLinkDiagram& d, const Coloring& c, const FinAbGroup& g);

// Canonical codes with the given crossing count and no crossingless
// components: crossings labelled 1..c in order of first appearance, text in
// the to_string() form. Returned sorted byte-wise, the search order used for
// the bundled generator diagram.
std::vector<std::string> canonical_gauss_codes(std::size_t crossings);

}  // namespace qhom
