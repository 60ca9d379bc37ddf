#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tfc/decomp.hpp"
#include "tfc/homology.hpp"
#include "tfc/validate.hpp"

namespace tfc {

using nlohmann::json;

namespace detail {
inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw InputError("unknown key '" + it.key() + "' in " + where);
  }
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError(where + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}
}  // namespace detail

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

inline json complex_to_json(const Complex& c) {
  json atoms = json::array();
  for (const auto& a : c.specs()) {
    json j{{"id", a.id}, {"dim", a.dim}};
    if (a.dim > 0) {
      j["minus"] = a.minus;
      j["plus"] = a.plus;
    }
    atoms.push_back(std::move(j));
  }
  json out{{"atoms", std::move(atoms)}};
  if (!c.name().empty()) out["name"] = c.name();
  return out;
}

// minus/plus present exactly for atoms of positive dimension; unknown keys
// are rejected.
inline Complex complex_from_json(const json& j) {
  detail::only_keys(j, {"name", "atoms"}, "complex");
  if (!j.contains("atoms") || !j["atoms"].is_array()) throw InputError("complex needs an 'atoms' array");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("complex name must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<AtomSpec> atoms;
  for (const auto& a : j["atoms"]) {
    detail::only_keys(a, {"id", "dim", "minus", "plus"}, "atom");
    if (!a.contains("id") || !a["id"].is_string()) throw InputError("atom needs a string 'id'");
    if (!a.contains("dim") || !a["dim"].is_number_integer()) throw InputError("atom needs an integer 'dim'");
    AtomSpec s{a["id"].get<std::string>(), a["dim"].get<int>(), {}, {}};
    const bool has = a.contains("minus") || a.contains("plus");
    if (s.dim == 0 && has) throw InputError("0-atom '" + s.id + "' must not list minus/plus");
    if (s.dim > 0) {
      if (!a.contains("minus") || !a.contains("plus")) throw InputError("atom '" + s.id + "' needs minus and plus");
      s.minus = detail::string_list(a["minus"], "minus of '" + s.id + "'");
      s.plus = detail::string_list(a["plus"], "plus of '" + s.id + "'");
    }
    atoms.push_back(std::move(s));
  }
  return Complex(std::move(atoms), std::move(name));
}

inline Complex read_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

inline std::string signed_key(Sign s, int i) { return std::string(1, sign_char(s)) + std::to_string(i); }

inline json cell_to_json(const Complex& p, const Cell& x) {
  json sets = json::object();
  for (int i = 0; i <= x.dim(); ++i)
    for (Sign s : {Sign::minus, Sign::plus}) sets[signed_key(s, i)] = p.ids_of(x.at(s, i));
  return json{{"n", x.dim()}, {"sets", std::move(sets)}};
}

inline Cell cell_from_json(const Complex& p, const json& j) {
  detail::only_keys(j, {"n", "sets"}, "cell");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0)
    throw InputError("cell needs a natural 'n'");
  if (!j.contains("sets") || !j["sets"].is_object()) throw InputError("cell needs a 'sets' object");
  const int n = j["n"].get<int>();
  Cell x(n, p.size());
  std::set<std::string> seen;
  for (int i = 0; i <= n; ++i)
    for (Sign s : {Sign::minus, Sign::plus}) {
      auto key = signed_key(s, i);
      if (!j["sets"].contains(key)) throw InputError("cell is missing set '" + key + "'");
      seen.insert(key);
      for (const auto& id : detail::string_list(j["sets"][key], "set " + key)) {
        AtomIndex a = p.index(id);
        if (p.dim(a) != i) throw InputError("atom '" + id + "' in set " + key + " has dimension " + std::to_string(p.dim(a)));
        x.at(s, i).set(a);
      }
    }
  for (auto it = j["sets"].begin(); it != j["sets"].end(); ++it)
    if (!seen.count(it.key())) throw InputError("unknown set key '" + it.key() + "'");
  return x;
}

inline json poset_to_json(const FinPreorder& p) {
  json leq = json::array();
  for (auto [i, j] : p.relation()) leq.push_back({i, j});
  return json{{"elements", p.labels()}, {"leq", std::move(leq)}};
}

// The order is the reflexive-transitive closure of the listed pairs.
inline FinPoset poset_from_json(const json& j) {
  detail::only_keys(j, {"elements", "leq"}, "poset");
  if (!j.contains("elements")) throw InputError("poset needs 'elements'");
  auto labels = detail::string_list(j["elements"], "elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw InputError("'leq' must be an array of pairs");
    for (const auto& e : j["leq"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw InputError("'leq' entries must be pairs of indices");
      pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  return FinPoset::generated(std::move(labels), pairs);
}

inline json homology_to_json(const HomologyReport& h) {
  json out{{"summary", h.describe()}, {"empty", h.empty}, {"trivial", h.trivial()}};
  json groups = json::array();
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    json t = json::array();
    for (const auto& v : h.groups[d].torsion) t.push_back(v.str());
    groups.push_back({{"degree", d}, {"rank", h.groups[d].rank}, {"torsion", std::move(t)}});
  }
  out["groups"] = std::move(groups);
  return out;
}

// {"mu", "elements": [{"term", "generators"}], "order": strict pairs [i, j]}.
inline json sd_to_json(DecompSpace& s, const DecompPoset& sd) {
  const CellTable& t = s.table();
  const Complex& p = t.complex();
  json elems = json::array();
  for (std::size_t i = 0; i < sd.size(); ++i) {
    json gens = json::object();
    for (const auto& [name, c] : s.generators(sd.elems[i])) gens[name] = cell_to_json(p, t.cell(c));
    elems.push_back({{"term", term_to_json(sd.terms[i])}, {"generators", std::move(gens)}});
  }
  json order = json::array();
  for (std::size_t a = 0; a < sd.size(); ++a)
    for (std::size_t b = 0; b < sd.size(); ++b)
      if (a != b && sd.order.leq(a, b)) order.push_back({a, b});
  return json{{"mu", cell_to_json(p, t.cell(sd.mu))}, {"elements", std::move(elems)}, {"order", std::move(order)}};
}

inline json validation_to_json(const ValidationReport& r) {
  json dims = json::array();
  for (const auto& d : r.dims)
    dims.push_back({{"dim", d.dim}, {"acyclic", d.acyclic}, {"cycle", d.cycle}, {"empty_boundary", d.empty_boundary}});
  json extra = json::array();
  for (const auto& e : r.extra) extra.push_back({{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
  return json{{"valid", r.valid},
              {"surrogate", r.surrogate},
              {"dimensions", std::move(dims)},
              {"atom_cells", {{"ok", r.atom_cells.ok}, {"detail", r.atom_cells.detail}}},
              {"extra", std::move(extra)}};
}

}  // namespace tfc
