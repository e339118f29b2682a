#include "qhom/specs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qhom {

namespace {

const std::vector<std::string>& known_names() {
  static const std::vector<std::string> names = {"abelian", "cyclic", "heisenberg3", "g4_27", "takasaki",
                                                 "dihedral", "core", "trivial", "extension", "generator", "zero"};
  return names;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

[[noreturn]] void unknown(const std::string& what, const std::string& name) {
  throw Error(ErrorKind::Parse, "unknown " + what + " '" + name + "' (did you mean '" + suggest_name(name) + "'?)");
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& context) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected an integer in " + context + ", got '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorKind::Parse, "trailing characters in " + context + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty integer list in " + context);
  return out;
}

std::pair<std::string, std::string> split_head(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

nlohmann::json load_json_text(const std::string& spec) {
  try {
    if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) return nlohmann::json::parse(spec);
    std::ifstream in(spec);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + spec + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_json_or_file(const std::string& spec) {
  return !spec.empty() && (spec.front() == '{' || spec.find('/') != std::string::npos ||
                           spec.ends_with(".json"));
}

Normalization parse_normalization(const std::string& s) {
  if (s == "plain") return Normalization::Plain;
  if (s == "halved") return Normalization::Halved;
  throw Error(ErrorKind::Parse, "normalization must be plain or halved, got '" + s + "'");
}

}  // namespace

std::string suggest_name(const std::string& name) {
  std::string best;
  std::size_t best_d = SIZE_MAX;
  for (const auto& n : known_names()) {
    const std::size_t d = edit_distance(name, n);
    if (d < best_d) {
      best_d = d;
      best = n;
    }
  }
  return best;
}

Group parse_group_spec(const std::string& spec) {
  if (looks_like_json_or_file(spec)) return group_from_json(load_json_text(spec));
  const auto [head, rest] = split_head(spec);
  if (head == "abelian") return FinAbGroup(parse_int_list(rest, spec));
  if (head == "cyclic") {
    const auto v = parse_int_list(rest, spec);
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorKind::Parse, "cyclic needs one positive order");
    return cyclic(static_cast<std::size_t>(v[0]));
  }
  if (head == "heisenberg3" && rest.empty()) return heisenberg3();
  if (head == "g4_27" && rest.empty()) return g4_27();
  unknown("group", head);
}

Group group_from_json(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "abelian") return FinAbGroup(j.at("moduli").get<std::vector<std::int64_t>>());
    if (type == "table") {
      const auto mult = j.at("mult").get<FiniteGroup::Table>();
      if (j.contains("n") && j.at("n").get<std::size_t>() != mult.size()) {
        throw Error(ErrorKind::Parse, "\"n\" does not match the table size");
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return FiniteGroup::from_mult_table(mult, std::move(labels));
    }
    unknown("group type", type);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad group JSON: ") + e.what());
  }
}

FiniteQuandle parse_quandle_spec(const std::string& spec) {
  if (looks_like_json_or_file(spec)) return quandle_from_json(load_json_text(spec));
  const auto [head, rest] = split_head(spec);
  if (head == "takasaki") return takasaki(FinAbGroup(parse_int_list(rest, spec)));
  if (head == "dihedral") {
    const auto v = parse_int_list(rest, spec);
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorKind::Parse, "dihedral needs one positive size");
    return dihedral(static_cast<std::size_t>(v[0]));
  }
  if (head == "trivial") {
    const auto v = parse_int_list(rest, spec);
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorKind::Parse, "trivial needs one positive size");
    return trivial_quandle(static_cast<std::size_t>(v[0]));
  }
  if (head == "core") {
    const Group g = parse_group_spec(rest);
    if (const auto* a = std::get_if<FinAbGroup>(&g)) return core(from_abelian(*a));
    return core(std::get<FiniteGroup>(g));
  }
  if (head == "extension") {
    const auto comma = rest.find(',');
    const auto p = parse_int_list(rest.substr(0, comma), spec);
    const Normalization norm =
        comma == std::string::npos ? Normalization::Halved : parse_normalization(rest.substr(comma + 1));
    return central_extension(generator_cocycle(p.at(0), norm));
  }
  unknown("quandle", head);
}

FiniteQuandle quandle_from_json(const nlohmann::json& j) {
  try {
    const auto table = j.at("table").get<CandidateTable>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != table.size()) {
      throw Error(ErrorKind::Parse, "\"n\" does not match the table size");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteQuandle::from_table(table, Provenance::Custom, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad quandle JSON: ") + e.what());
  }
}

nlohmann::json quandle_to_json(const FiniteQuandle& q) {
  return nlohmann::json{{"n", q.size()}, {"table", q.table()}};
}

TwoCocycle parse_cocycle_spec(const std::string& spec, const FiniteQuandle* base) {
  if (looks_like_json_or_file(spec)) return cocycle_from_json(load_json_text(spec));
  const auto [head, rest] = split_head(spec);
  if (head == "generator") {
    const auto comma = rest.find(',');
    const auto p = parse_int_list(rest.substr(0, comma), spec);
    const Normalization norm =
        comma == std::string::npos ? Normalization::Halved : parse_normalization(rest.substr(comma + 1));
    return generator_cocycle(p.at(0), norm);
  }
  if (head == "zero") {
    if (base == nullptr) throw Error(ErrorKind::Parse, "zero cocycle needs a base quandle");
    const auto m = parse_int_list(rest, spec);
    return zero_cocycle(*base, m.at(0));
  }
  unknown("cocycle", head);
}

TwoCocycle cocycle_from_json(const nlohmann::json& j) {
  try {
    const auto& qj = j.at("quandle");
    const FiniteQuandle q = qj.is_string() ? parse_quandle_spec(qj.get<std::string>()) : quandle_from_json(qj);
    return make_cocycle(q, j.at("modulus").get<std::int64_t>(), j.at("values").get<CocycleTable>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad cocycle JSON: ") + e.what());
  }
}

nlohmann::json cocycle_to_json(const TwoCocycle& phi, const std::string& quandle_spec) {
  nlohmann::json q = quandle_spec.empty() ? quandle_to_json(phi.quandle()) : nlohmann::json(quandle_spec);
  return nlohmann::json{{"quandle", q}, {"modulus", phi.modulus()}, {"values", phi.table()}};
}

nlohmann::json homology_to_json(const HomologyGroup& h) {
  return nlohmann::json{{"free_rank", h.free_rank}, {"torsion", h.torsion}};
}

HomologyGroup homology_from_json(const nlohmann::json& j) {
  try {
    HomologyGroup h{j.at("free_rank").get<std::size_t>(), j.at("torsion").get<std::vector<std::int64_t>>()};
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      if (h.torsion[i] < 2 || (i > 0 && h.torsion[i] % h.torsion[i - 1] != 0)) {
        throw Error(ErrorKind::Parse, "torsion must be a divisibility chain of entries >= 2");
      }
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad homology JSON: ") + e.what());
  }
}

nlohmann::json chain_to_json(const Chain& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, v] : c.terms()) terms.push_back({{"coeff", v}, {"tuple", t}});
  return nlohmann::json{{"degree", c.degree()}, {"terms", terms}};
}

Chain chain_from_json(const nlohmann::json& j) {
  try {
    Chain c(j.at("degree").get<std::size_t>());
    for (const auto& term : j.at("terms")) c.add(term.at("tuple").get<Tuple>(), term.at("coeff").get<std::int64_t>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad chain JSON: ") + e.what());
  }
}

}  // namespace qhom
