// Searches signed Gauss codes by crossing count, then byte-wise order of the
// canonical text, for the first diagram with a T(Z_3 + Z_3) colouring whose
// 2-cycle has class e1 ^ e2. Writes the code and colouring used by the
// bundled data/generator_diagram.* fixtures.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhom/links.hpp"

int main(int argc, char** argv) {
  CLI::App app{"search for a diagram realizing e1 ^ e2 in H2 of T(Z_3 + Z_3)"};
  std::size_t max_crossings = 6;
  std::string out_prefix;
  app.add_option("--max-crossings", max_crossings, "largest crossing count to search");
  app.add_option("--out", out_prefix, "write <out>.gauss and <out>_coloring.json");
  CLI11_PARSE(app, argc, argv);

  const qhom::FinAbGroup g({3, 3});
  const qhom::FiniteQuandle q = qhom::takasaki(g);
  const qhom::ExtElem target = qhom::wedge(g, g.basis(0), g.basis(1));

  for (std::size_t c = 1; c <= max_crossings; ++c) {
    const auto codes = qhom::canonical_gauss_codes(c);
    std::cerr << c << " crossings: " << codes.size() << " codes\n";
    for (const auto& code : codes) {
      const auto d = qhom::parse_gauss(code);
      std::optional<qhom::Coloring> hit;
      qhom::for_each_coloring(d, q, [&](const qhom::Coloring& col) {
        if (qhom::diagram_class(d, col, g) == target) {
          hit = col;
          return false;
        }
        return true;
      });
      if (!hit) continue;
      std::cout << "code: " << code << "\ncoloring:";
      for (auto x : *hit) std::cout << ' ' << x;
      std::cout << '\n';
      if (!out_prefix.empty()) {
        std::ofstream(out_prefix + ".gauss") << code << '\n';
        nlohmann::json j{{"quandle", "takasaki:3,3"}, {"coloring", *hit}, {"class", target}};
        std::ofstream(out_prefix + "_coloring.json") << j.dump(2) << '\n';
      }
      return EXIT_SUCCESS;
    }
  }
  std::cerr << "no diagram found up to " << max_crossings << " crossings\n";
  return EXIT_FAILURE;
}
