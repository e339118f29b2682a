// qhom: command-line front end for the quandle homology library.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhom/cocycle.hpp"
#include "qhom/error.hpp"
#include "qhom/groups.hpp"
#include "qhom/homology.hpp"
#include "qhom/intlinalg.hpp"
#include "qhom/links.hpp"
#include "qhom/quandle.hpp"
#include "qhom/specs.hpp"

namespace {

using namespace qhom;
using nlohmann::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kResource = 3 };

// Optional overrides: QHOM_MAX_MATRIX_COLUMNS, QHOM_MAX_ELIMINATION_SECONDS.
Budget budget_from_env() {
  Budget b = default_budget();
  auto read = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
  };
  try {
    if (const char* v = read("QHOM_MAX_MATRIX_COLUMNS")) b.max_matrix_columns = std::stoull(v);
    if (const char* v = read("QHOM_MAX_ELIMINATION_SECONDS")) b.max_elimination_seconds = std::stod(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "invalid resource budget in the environment");
  }
  return b;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string counts_text(const StateSum& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < s.counts.size(); ++v) {
    if (s.counts[v] == 0) continue;
    out += (first ? "" : ", ") + std::to_string(v) + ": " + std::to_string(s.counts[v]);
    first = false;
  }
  return out + "}";
}

json counts_json(const StateSum& s) {
  json counts = json::object();
  for (std::size_t v = 0; v < s.counts.size(); ++v)
    if (s.counts[v] != 0) counts[std::to_string(v)] = s.counts[v];
  return json{{"colorings", s.colorings}, {"counts", counts}};
}

Theory parse_theory(const std::string& s) {
  if (s == "rack") return Theory::Rack;
  if (s == "quandle") return Theory::Quandle;
  throw Error(ErrorKind::Parse, "theory must be rack or quandle, got '" + s + "'");
}

std::vector<std::int64_t> parse_moduli(const std::string& s) {
  const Group g = parse_group_spec("abelian:" + s);
  return std::get<FinAbGroup>(g).moduli();
}

struct HomologyOpts {
  std::string quandle;
  std::size_t degree = 2;
  std::string theory = "quandle";
  bool json = false;
};

int cmd_homology(const HomologyOpts& o) {
  const auto q = parse_quandle_spec(o.quandle);
  const Theory th = parse_theory(o.theory);
  const auto h = homology(q, o.degree, th, budget_from_env());
  if (o.json) {
    json j = homology_to_json(h);
    j["degree"] = o.degree;
    j["theory"] = to_string(th);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << h.to_string() << '\n';
  }
  return kOk;
}

// Direct sum of cyclic groups Z_m in invariant-factor form.
HomologyGroup as_invariant_factors(const std::vector<std::int64_t>& moduli) {
  SparseIntMatrix d(moduli.size(), 0);
  for (std::size_t i = 0; i < moduli.size(); ++i) d.push_column({{static_cast<std::uint32_t>(i), moduli[i]}});
  HomologyGroup out;
  out.torsion = torsion_of(smith(d));
  return out;
}

struct VerifyOpts {
  std::string group;
  bool json = false;
};

int cmd_verify_theorem(const VerifyOpts& o) {
  const FinAbGroup g(parse_moduli(o.group));
  if (!g.all_odd()) {
    throw Error(ErrorKind::NotOddOrder, "G = " + g.to_string() +
                                            " has even order; the isomorphism H2Q(T(G)) = G ^ G needs every "
                                            "modulus odd (2 must be invertible)");
  }
  const auto h = homology(takasaki(g), 2, Theory::Quandle, budget_from_env());
  const HomologyGroup ext = as_invariant_factors(exterior_square(g).moduli());
  const bool pass = h == ext;
  if (o.json) {
    std::cout << json{{"group", g.moduli()},
                      {"h2", homology_to_json(h)},
                      {"exterior_square", homology_to_json(ext)},
                      {"pass", pass}}
                     .dump()
              << '\n';
  } else {
    std::cout << "G = " << g.to_string() << '\n'
              << "H2Q(T(G)) = " << h.to_string() << '\n'
              << "G ^ G = " << ext.to_string() << '\n'
              << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kFail;
}

struct ExtensionOpts {
  std::int64_t p = 3;
  std::string normalization = "halved";
  bool emit_table = false;
  bool check_h2 = false;
  bool json = false;
};

int cmd_extension(const ExtensionOpts& o) {
  if (o.normalization != "plain" && o.normalization != "halved")
    throw Error(ErrorKind::Parse, "normalization must be plain or halved");
  const auto phi =
      generator_cocycle(o.p, o.normalization == "plain" ? Normalization::Plain : Normalization::Halved);
  const auto e = central_extension(phi);
  const bool kei = is_kei(e);
  const bool qg = is_quasigroup(e);
  std::optional<HomologyGroup> h2;
  if (o.check_h2) h2 = homology(e, 2, Theory::Quandle, budget_from_env());
  if (o.json) {
    json j{{"p", o.p}, {"normalization", o.normalization}, {"size", e.size()}, {"kei", kei}, {"quasigroup", qg}};
    if (h2) j["h2"] = homology_to_json(*h2);
    if (o.emit_table) j["table"] = e.table();
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "size: " << e.size() << '\n';
  std::cout << "kei: " << bool_str(kei) << ", quasigroup: " << bool_str(qg);
  if (h2) std::cout << ", H2: " << h2->to_string();
  std::cout << '\n';
  if (o.emit_table) {
    for (const auto& row : e.table()) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << '\n';
    }
  }
  return kOk;
}

struct InvariantOpts {
  std::string diagram;
  std::string quandle;
  std::string cocycle;
  bool json = false;
};

int cmd_invariant(const InvariantOpts& o) {
  const auto d = parse_gauss(read_file(o.diagram));
  StateSum s;
  if (o.cocycle.empty()) {
    if (o.quandle.empty()) throw Error(ErrorKind::Parse, "--quandle or --cocycle is required");
    const auto q = parse_quandle_spec(o.quandle);
    for_each_coloring(d, q, [&](const Coloring&) {
      ++s.colorings;
      return true;
    });
    s.counts = {s.colorings};
  } else {
    std::optional<FiniteQuandle> q;
    if (!o.quandle.empty()) q = parse_quandle_spec(o.quandle);
    const auto phi = parse_cocycle_spec(o.cocycle, q ? &*q : nullptr);
    if (q && !(phi.quandle() == *q))
      throw Error(ErrorKind::ElementMismatch, "the cocycle is defined on a different quandle than --quandle");
    s = state_sum(d, phi);
  }
  if (o.json) {
    std::cout << counts_json(s).dump() << '\n';
  } else {
    std::cout << "colorings: " << s.colorings << ", counts: " << counts_text(s) << '\n';
  }
  return kOk;
}

struct AxiomsOpts {
  std::string quandle;
  bool json = false;
};

bool is_raw_table(const std::string& spec) {
  return !spec.empty() && (spec.front() == '{' || spec.front() == '[' || spec.find('/') != std::string::npos ||
                           spec.ends_with(".json"));
}

int cmd_axioms(const AxiomsOpts& o) {
  CandidateTable table;
  if (is_raw_table(o.quandle)) {
    const std::string text = o.quandle.front() == '{' || o.quandle.front() == '[' ? o.quandle : read_file(o.quandle);
    try {
      const json j = json::parse(text);
      table = (j.is_array() ? j : j.at("table")).get<CandidateTable>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("invalid quandle table: ") + e.what());
    }
  } else {
    table = parse_quandle_spec(o.quandle).table();
  }
  const auto report = verify_axioms(table);
  json j{{"size", table.size()}, {"quandle", ok(report)}};
  if (!ok(report)) {
    const auto& f = std::get<AxiomFailure>(report);
    j["failure"] = {{"axiom", to_string(f.axiom)}, {"witness", f.witness}, {"message", f.message}};
  } else {
    const auto q = FiniteQuandle::from_table(table);
    j["kei"] = is_kei(q);
    j["quasigroup"] = is_quasigroup(q);
    j["orbits"] = orbits(q).size();
  }
  if (o.json) {
    std::cout << j.dump() << '\n';
  } else if (!ok(report)) {
    std::cout << "quandle: false (" << j["failure"]["axiom"].get<std::string>() << ": "
              << j["failure"]["message"].get<std::string>() << ")\n";
  } else {
    std::cout << "quandle: true, kei: " << bool_str(j["kei"]) << ", quasigroup: " << bool_str(j["quasigroup"])
              << ", orbits: " << j["orbits"] << '\n';
  }
  return ok(report) ? kOk : kFail;
}

int cmd_reproduce() {
  const Budget b = budget_from_env();
  int failures = 0;
  auto check = [&](const std::string& what, const std::string& expected, const std::function<std::string()>& f) {
    const auto got = f();
    const bool pass = got == expected;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << what << "  expected " << expected << ", got " << got << '\n';
    std::cout.flush();
  };
  auto h2 = [&](const std::string& spec) {
    return [spec, &b] { return homology(parse_quandle_spec(spec), 2, Theory::Quandle, b).to_string(); };
  };
  auto tor = [&](const std::string& spec) {
    return [spec, &b] {
      auto h = homology(parse_quandle_spec(spec), 2, Theory::Quandle, b);
      h.free_rank = 0;
      return h.to_string();
    };
  };

  check("H2Q(T(Z_3 ⊕ Z_3))", "Z_3", h2("takasaki:3,3"));
  check("H2Q(T(Z_5 ⊕ Z_5))", "Z_5", h2("takasaki:5,5"));
  check("H2Q(T(Z_27))", "0", h2("takasaki:27"));
  check("H2Q(T(Z_3 ⊕ Z_9))", "Z_3", h2("takasaki:3,9"));
  check("H2Q(T(Z_3 ⊕ Z_3 ⊕ Z_3))", "Z_3 ⊕ Z_3 ⊕ Z_3", h2("takasaki:3,3,3"));
  check("H2Q(core(Z_9 ⋊ Z_3))", "Z_3", h2("core:g4_27"));
  check("H2Q(core(Heisenberg mod 3))", "Z_3 ⊕ Z_3 ⊕ Z_3", h2("core:heisenberg3"));
  check("tor H2Q(T(Z_4))", "Z_2 ⊕ Z_2", tor("dihedral:4"));
  check("tor H2Q(T(Z_8))", "Z_2 ⊕ Z_2", tor("dihedral:8"));
  check("phi(e1, e2) for p = 3", "1", [] {
    const FinAbGroup g({3, 3});
    return std::to_string(generator_cocycle(3)(g.index_of(g.basis(0)), g.index_of(g.basis(1))));
  });
  check("phi(e2, e1) for p = 3", "2", [] {
    const FinAbGroup g({3, 3});
    return std::to_string(generator_cocycle(3)(g.index_of(g.basis(1)), g.index_of(g.basis(0))));
  });
  check("dim H^2_Q(T(Z_3 ⊕ Z_3); Z_3)", "1",
        [&] { return std::to_string(cohomology2_dim(parse_quandle_spec("takasaki:3,3"), 3, b)); });
  check("E(T(Z_3 ⊕ Z_3), Z_3, phi) kei", "true", [] { return bool_str(is_kei(central_extension(generator_cocycle(3)))); });
  check("E(T(Z_3 ⊕ Z_3), Z_3, phi) quasigroup", "false",
        [] { return bool_str(is_quasigroup(central_extension(generator_cocycle(3)))); });
  check("H2Q(E(T(Z_3 ⊕ Z_3), Z_3, phi))", "0", h2("extension:3,halved"));
  std::cout << (failures ? "FAIL" : "PASS") << ": " << failures << " mismatches\n";
  return failures ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandle homology workbench"};
  app.require_subcommand(1);
  std::function<int()> run;

  HomologyOpts ho;
  auto* hom = app.add_subcommand("homology", "integral rack or quandle homology of a finite quandle");
  hom->add_option("--quandle", ho.quandle, "quandle spec (takasaki:3,3, dihedral:5, core:g4_27, file.json, ...)")
      ->required();
  hom->add_option("--degree", ho.degree, "homological degree")->required();
  hom->add_option("--theory", ho.theory, "rack or quandle")->check(CLI::IsMember({"rack", "quandle"}));
  hom->add_flag("--json", ho.json, "JSON output");
  hom->callback([&] { run = [&] { return cmd_homology(ho); }; });

  VerifyOpts to;
  auto* thm = app.add_subcommand("verify-theorem", "compare H2Q(T(G)) with G ^ G for an odd abelian G");
  thm->add_option("--group", to.group, "moduli, e.g. 3,9")->required();
  thm->add_flag("--json", to.json, "JSON output");
  thm->callback([&] { run = [&] { return cmd_verify_theorem(to); }; });

  ExtensionOpts eo;
  auto* ext = app.add_subcommand("extension", "abelian extension of T(Z_p + Z_p) by the generator cocycle");
  ext->add_option("--p", eo.p, "odd prime")->required();
  ext->add_option("--normalization", eo.normalization, "plain or halved")
      ->check(CLI::IsMember({"plain", "halved"}));
  ext->add_flag("--emit-table", eo.emit_table, "print the operation table");
  ext->add_flag("--check-h2", eo.check_h2, "compute H2Q of the extension");
  ext->add_flag("--json", eo.json, "JSON output");
  ext->callback([&] { run = [&] { return cmd_extension(eo); }; });

  InvariantOpts io;
  auto* inv = app.add_subcommand("invariant", "coloring count and cocycle state sum of a Gauss-code diagram");
  inv->add_option("--diagram", io.diagram, "file holding a signed Gauss code")->required();
  inv->add_option("--quandle", io.quandle, "quandle spec");
  inv->add_option("--cocycle", io.cocycle, "cocycle spec (generator:3,halved, zero:3, file.json)");
  inv->add_flag("--json", io.json, "JSON output");
  inv->callback([&] { run = [&] { return cmd_invariant(io); }; });

  AxiomsOpts ao;
  auto* ax = app.add_subcommand("axioms", "check the quandle axioms, kei and quasigroup properties");
  ax->add_option("--quandle", ao.quandle, "quandle spec, JSON table or file")->required();
  ax->add_flag("--json", ao.json, "JSON output");
  ax->callback([&] { run = [&] { return cmd_axioms(ao); }; });

  auto* rep = app.add_subcommand("reproduce-paper", "recompute every published value and compare");
  rep->callback([&] { run = [] { return cmd_reproduce(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ResourceLimit ? kResource : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
