#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tfc/catalog.hpp"
#include "tfc/json_io.hpp"
#include "tfc/theta.hpp"

namespace tfc {

enum class GenKind { globe, theta, oriental, cube };

// One corpus entry: a catalog complex, or the complex of its atoms below
// the top dimension.
struct GeneratorSpec {
  GenKind kind = GenKind::globe;
  int n = 0;
  ThetaTerm term;
  bool boundary = false;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

inline const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::globe: return "globe";
    case GenKind::theta: return "theta";
    case GenKind::oriental: return "oriental";
    case GenKind::cube: return "cube";
  }
  return "?";
}

inline GenKind kind_from_name(const std::string& s) {
  if (s == "globe") return GenKind::globe;
  if (s == "theta") return GenKind::theta;
  if (s == "oriental") return GenKind::oriental;
  if (s == "cube") return GenKind::cube;
  throw InputError("unknown generator kind '" + s + "'");
}

// "oriental:3", "cube:2", "globe:1", "theta:[[],[]]"; a "boundary:" prefix
// drops the top-dimensional atoms.
inline std::string spec_label(const GeneratorSpec& g) {
  std::string s = g.boundary ? "boundary:" : "";
  s += kind_name(g.kind);
  s += ":";
  s += g.kind == GenKind::theta ? to_string(g.term) : std::to_string(g.n);
  return s;
}

inline GeneratorSpec parse_spec(std::string s) {
  GeneratorSpec g;
  const std::string bprefix = "boundary:";
  if (s.rfind(bprefix, 0) == 0) {
    g.boundary = true;
    s = s.substr(bprefix.size());
  }
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("generator spec needs the form kind:parameter");
  g.kind = kind_from_name(s.substr(0, colon));
  auto arg = s.substr(colon + 1);
  if (g.kind == GenKind::theta) {
    g.term = parse_term(arg);
  } else {
    try {
      std::size_t used = 0;
      g.n = std::stoi(arg, &used);
      if (used != arg.size() || g.n < 0) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("generator parameter must be a natural number, got '" + arg + "'");
    }
  }
  return g;
}

inline Complex build(const GeneratorSpec& g) {
  Complex c;
  switch (g.kind) {
    case GenKind::globe: c = globe(g.n); break;
    case GenKind::theta: c = term_to_complex(g.term); break;
    case GenKind::oriental: c = oriental(g.n); break;
    case GenKind::cube: c = gray_cube(g.n); break;
  }
  return g.boundary ? boundary_complex(c) : c;
}

// All terms with at most max_atoms atoms and dimension at most max_dim, in
// increasing (atom count, term) order.
inline std::vector<ThetaTerm> theta_terms(std::size_t max_atoms, int max_dim) {
  // by_size[k]: terms of exactly k atoms and dimension ≤ max_dim - depth.
  std::function<std::vector<ThetaTerm>(std::size_t, int)> exact = [&](std::size_t atoms, int dim) {
    std::vector<ThetaTerm> out;
    if (atoms == 1) {
      out.push_back({});
      return out;
    }
    if (dim <= 0) return out;
    // [t1..tr] has r + 1 + Σ|ti| atoms; build the child list left to right.
    std::function<void(std::size_t, std::vector<ThetaTerm>&)> go = [&](std::size_t left, std::vector<ThetaTerm>& kids) {
      // kids.size() + 1 atoms for the objects, left for children still to place
      if (left == 0 && !kids.empty()) {
        out.push_back({kids});
        return;
      }
      // A new child costs one object plus its own atoms.
      for (std::size_t c = 1; c + 1 <= left; ++c)
        for (auto& t : exact(c, dim - 1)) {
          kids.push_back(t);
          go(left - c - 1, kids);
          kids.pop_back();
        }
    };
    std::vector<ThetaTerm> kids;
    go(atoms - 1, kids);
    return out;
  };
  std::vector<ThetaTerm> all;
  for (std::size_t a = 1; a <= max_atoms; ++a) {
    auto ts = exact(a, max_dim);
    std::sort(ts.begin(), ts.end());
    all.insert(all.end(), ts.begin(), ts.end());
  }
  return all;
}

struct CorpusParams {
  std::size_t theta_atoms = 11;
  int theta_dim = 3;
  int oriental_max = 4;
  int cube_max = 3;
};

// Catalog complexes and their boundaries. Boundaries that are empty are
// left out.
inline std::vector<GeneratorSpec> default_corpus(const CorpusParams& cp = {}) {
  std::vector<GeneratorSpec> out;
  auto add = [&](GeneratorSpec g) {
    out.push_back(g);
    if (build(g).dim() > 0) {
      g.boundary = true;
      out.push_back(g);
    }
  };
  for (auto& t : theta_terms(cp.theta_atoms, cp.theta_dim)) add({GenKind::theta, 0, t, false});
  for (int n = 0; n <= cp.oriental_max; ++n) add({GenKind::oriental, n, {}, false});
  for (int n = 0; n <= cp.cube_max; ++n) add({GenKind::cube, n, {}, false});
  return out;
}

inline json spec_to_json(const GeneratorSpec& g) {
  json j{{"kind", kind_name(g.kind)}};
  if (g.kind == GenKind::theta) j["term"] = term_to_json(g.term);
  else j["n"] = g.n;
  if (g.boundary) j["boundary"] = true;
  return j;
}

inline GeneratorSpec spec_from_json(const json& j) {
  detail::only_keys(j, {"kind", "n", "term", "boundary"}, "generator spec");
  if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("generator spec needs a 'kind'");
  GeneratorSpec g;
  g.kind = kind_from_name(j["kind"].get<std::string>());
  if (g.kind == GenKind::theta) {
    if (!j.contains("term")) throw InputError("theta spec needs a 'term'");
    g.term = term_from_json(j["term"]);
  } else {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0)
      throw InputError("generator spec needs a natural 'n'");
    g.n = j["n"].get<int>();
  }
  if (j.contains("boundary")) {
    if (!j["boundary"].is_boolean()) throw InputError("'boundary' must be a boolean");
    g.boundary = j["boundary"].get<bool>();
  }
  return g;
}

inline json manifest_to_json(const std::vector<GeneratorSpec>& specs) {
  json entries = json::array();
  for (const auto& g : specs) entries.push_back(spec_to_json(g));
  return json{{"entries", std::move(entries)}};
}

inline std::vector<GeneratorSpec> manifest_from_json(const json& j) {
  detail::only_keys(j, {"entries"}, "manifest");
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("manifest needs an 'entries' array");
  std::vector<GeneratorSpec> out;
  for (const auto& e : j["entries"]) out.push_back(spec_from_json(e));
  return out;
}

inline std::vector<GeneratorSpec> load_manifest(const std::string& path) { return manifest_from_json(read_json_file(path)); }

}  // namespace tfc
