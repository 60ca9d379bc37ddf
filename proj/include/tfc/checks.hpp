#pragma once

#include <chrono>
#include <cstdint>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfc/corpus.hpp"
#include "tfc/fibers.hpp"
#include "tfc/homology.hpp"
#include "tfc/json_io.hpp"

namespace tfc {

enum class Verdict { pass, fail, error, budget };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
    case Verdict::budget: return "budget";
  }
  return "?";
}

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::error: return 2;
    case Verdict::budget: return 3;
  }
  return 2;
}

// Worst of two verdicts, budget beating fail.
inline Verdict combine(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::pass: return 0;
      case Verdict::fail: return 1;
      case Verdict::budget: return 2;
      case Verdict::error: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

struct Target {
  std::string label;
  Complex complex;
};

struct CheckOptions {
  std::size_t budget = 5'000'000;      // decomposition nodes per target
  std::size_t max_cells = 2'000'000;   // cells per target
  std::size_t shape_budget = 1000;     // generators per Θ point
  std::optional<int> d;                // sphere dimension parameter
  std::size_t max_carrier = 4;         // preorder carrier size
  std::optional<std::string> cell;     // cell JSON or "big"
  bool core_reduce = true;
};

struct CheckReport {
  std::string name;
  std::string claim;
  Verdict verdict = Verdict::pass;
  json details = json::object();
  std::vector<std::pair<std::string, std::uint64_t>> inputs;

  bool ok() const { return verdict == Verdict::pass; }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t complex_hash(const Complex& c) { return fnv1a(complex_to_json(c).dump()); }

inline std::string cell_label(const Complex& p, const Cell& x) {
  std::string s = "(";
  for (int i = 0; i <= x.dim(); ++i)
    for (Sign sg : {Sign::minus, Sign::plus}) {
      if (i == x.dim() && sg == Sign::plus) continue;
      if (s.size() > 1) s += ' ';
      s += signed_key(i == x.dim() ? Sign::plus : sg, i) + "{";
      bool first = true;
      for (const auto& id : p.ids_of(x.at(sg, i))) {
        if (!first) s += ',';
        first = false;
        s += id;
      }
      s += '}';
    }
  return s + ")";
}

// corpus, a manifest path, a complex file, or a generator spec.
inline std::vector<Target> resolve_targets(const std::string& target, const std::string& manifest_path) {
  std::vector<Target> out;
  auto from_specs = [&](const std::vector<GeneratorSpec>& specs) {
    for (const auto& g : specs) out.push_back({spec_label(g), build(g)});
  };
  if (target == "corpus") {
    from_specs(load_manifest(manifest_path));
  } else if (target.size() > 5 && target.substr(target.size() - 5) == ".json") {
    json j = read_json_file(target);
    if (j.contains("entries")) from_specs(manifest_from_json(j));
    else out.push_back({target, complex_from_json(j)});
  } else {
    from_specs({parse_spec(target)});
  }
  return out;
}

// Cells to examine: all of them, the big cell, or one given as JSON.
inline std::vector<CellId> select_cells(const CellTable& t, const std::optional<std::string>& sel) {
  std::vector<CellId> out;
  if (!sel) {
    for (CellId c = 0; c < t.size(); ++c) out.push_back(c);
  } else if (*sel == "big") {
    auto b = big_cell(t);
    if (!b) throw InputError("complex has no big cell");
    out.push_back(*b);
  } else {
    json j;
    try {
      j = json::parse(*sel);
    } catch (const json::exception& e) {
      throw InputError(std::string("cannot parse --cell: ") + e.what());
    }
    Cell x = cell_from_json(t.complex(), j);
    auto chk = is_cell(t.complex(), x);
    if (!chk) throw InputError("--cell is not a cell: " + chk.reason);
    out.push_back(t.id_of(x));
  }
  return out;
}

inline bool is_atom_cell(const CellTable& t, CellId c) {
  const Cell& x = t.cell(c);
  if (x.plus(x.dim()).count() != 1) return false;
  return x == atom_cell(t.complex(), static_cast<AtomIndex>(x.plus(x.dim()).first()));
}

namespace detail {
// Runs `body` per target, turning exceptions into verdicts.
inline void per_target(CheckReport& r, const std::vector<Target>& targets, const CheckOptions& opt,
                       const std::function<Verdict(const Target&, const CellTable&, DecompSpace&, json&)>& body) {
  json per = json::array();
  for (const auto& tg : targets) {
    r.inputs.emplace_back(tg.label, complex_hash(tg.complex));
    json d{{"target", tg.label}};
    Verdict v;
    try {
      CellTable t(tg.complex, {opt.max_cells, Traversal::fifo});
      DecompSpace s(t, opt.budget);
      v = body(tg, t, s, d);
    } catch (const BudgetError& e) {
      v = Verdict::budget;
      d["error"] = e.what();
    } catch (const InputError& e) {
      v = Verdict::error;
      d["error"] = e.what();
    }
    d["verdict"] = verdict_name(v);
    r.verdict = combine(r.verdict, v);
    per.push_back(std::move(d));
  }
  r.details["targets"] = std::move(per);
}

inline Verdict pass_if(bool ok) { return ok ? Verdict::pass : Verdict::fail; }
}  // namespace detail

// Sd(μ) has vanishing reduced homology for every composite μ.
inline CheckReport check_thm_a(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"thm-a", "the poset of proper decompositions of every composite cell is contractible"};
  std::size_t instances = 0, dismantled = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace& s, json& d) {
    bool ok = true;
    json failures = json::array(), undismantled = json::array();
    std::size_t here = 0;
    for (CellId c : select_cells(t, opt.cell)) {
      if (is_atom_cell(t, c)) continue;
      ++here;
      auto sd = enumerate_sd(s, c, std::nullopt, false);
      auto h = homology(sd.order, {opt.core_reduce, 5'000'000});
      bool dis = dismantle(sd.order);
      if (dis) ++dismantled;
      else undismantled.push_back(cell_label(t.complex(), t.cell(c)));
      if (!h.trivial()) {
        ok = false;
        failures.push_back({{"cell", cell_label(t.complex(), t.cell(c))}, {"size", sd.size()}, {"homology", h.describe()}});
      }
    }
    instances += here;
    d["composite_cells"] = here;
    if (!failures.empty()) d["failures"] = failures;
    if (!undismantled.empty()) d["not_dismantled"] = undismantled;
    return detail::pass_if(ok);
  });
  r.details["instances"] = instances;
  r.details["dismantled"] = dismantled;
  return r;
}

// lin(discrete d) has the homology of S^{d-2}.
inline CheckReport check_disc_sphere(const CheckOptions& opt = {}) {
  CheckReport r{"disc-sphere", "linear preorders refining a discrete d-element preorder form a (d-2)-sphere"};
  std::vector<int> ds = opt.d ? std::vector<int>{*opt.d} : std::vector<int>{2, 3, 4};
  json per = json::array();
  for (int d : ds) {
    if (d < 1 || d > 8) throw InputError("--d must lie in [1, 8]");
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    auto l = lin(FinPreorder(labels));
    auto h = homology(l, {opt.core_reduce, 5'000'000});
    // d = 1 gives the empty poset, the (-1)-sphere.
    bool ok = d == 1 ? h.empty : same_homology(h, sphere_homology(d - 2));
    r.verdict = combine(r.verdict, detail::pass_if(ok));
    per.push_back({{"d", d}, {"elements", l.size()}, {"homology", h.describe()}, {"ok", ok}});
  }
  r.details["cases"] = per;
  return r;
}

// lin(P) ≅ sd(dc(P)) for every preorder up to the carrier bound.
inline CheckReport check_iso_sd(const CheckOptions& opt = {}) {
  CheckReport r{"iso-sd", "linear preorders refining P are isomorphic to the subdivision of its proper down-sets"};
  if (opt.max_carrier > 5) throw InputError("--max-carrier must be at most 5");
  json per = json::array();
  for (std::size_t n = 1; n <= opt.max_carrier; ++n) {
    std::size_t count = 0, bad = 0;
    for (const auto& p : preorders_up_to_iso(n)) {
      ++count;
      if (!iso_check(lin(p), barycentric_sd(dc(p)))) ++bad;
    }
    r.verdict = combine(r.verdict, detail::pass_if(bad == 0));
    per.push_back({{"carrier", n}, {"preorders", count}, {"failures", bad}});
  }
  r.details["sizes"] = per;
  return r;
}

// dc(P) and lin(P) are contractible when P is not an equivalence relation.
inline CheckReport check_dc_contract(const CheckOptions& opt = {}) {
  CheckReport r{"dc-contract", "down-sets and linear refinements of a non-equivalence preorder are contractible"};
  if (opt.max_carrier > 5) throw InputError("--max-carrier must be at most 5");
  json per = json::array();
  for (std::size_t n = 1; n <= opt.max_carrier; ++n) {
    std::size_t count = 0, bad = 0;
    for (const auto& p : preorders_up_to_iso(n)) {
      if (p.is_equivalence()) continue;
      ++count;
      auto D = dc(p);
      auto L = lin(p);
      if (!homology(D, {opt.core_reduce, 5'000'000}).trivial() || !dismantle(D) ||
          !homology(L, {opt.core_reduce, 5'000'000}).trivial())
        ++bad;
    }
    r.verdict = combine(r.verdict, detail::pass_if(bad == 0));
    per.push_back({{"carrier", n}, {"preorders", count}, {"failures", bad}});
  }
  r.details["sizes"] = per;
  return r;
}

inline CheckReport check_pos_iso_all(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"pos-iso", "L_k is an isomorphism from (k-1)-linear decompositions onto Lin(At_k)"};
  std::size_t instances = 0, skipped = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace& s, json& d) {
    bool ok = true;
    json failures = json::array();
    for (CellId c : select_cells(t, opt.cell)) {
      if (is_atom_cell(t, c) && !opt.cell) continue;
      for (int k = 1; k <= t.dim(c); ++k) {
        try {
          auto res = check_pos_iso(s, c, k);
          ++instances;
          if (!res.ok) {
            ok = false;
            failures.push_back({{"cell", cell_label(t.complex(), t.cell(c))}, {"k", k}, {"why", res.failure}});
          }
        } catch (const HypothesisNotMet&) {
          ++skipped;
        }
      }
    }
    if (!failures.empty()) d["failures"] = failures;
    return detail::pass_if(ok);
  });
  r.details["instances"] = instances;
  r.details["hypothesis_not_met"] = skipped;
  return r;
}

inline CheckReport check_exists_min(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"exists-min", "a cell is an atom iff every At_k of it is an equivalence relation"};
  std::size_t composites = 0, atoms = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace&, json& d) {
    bool ok = true;
    json failures = json::array();
    for (CellId c : select_cells(t, opt.cell)) {
      auto k = exists_min_k(t.complex(), t.cell(c));
      bool atom = is_atom_cell(t, c);
      (atom ? atoms : composites)++;
      if (atom == k.has_value()) {
        ok = false;
        failures.push_back({{"cell", cell_label(t.complex(), t.cell(c))}, {"atom", atom}, {"k", k ? *k : -1}});
      }
    }
    if (!failures.empty()) d["failures"] = failures;
    return detail::pass_if(ok);
  });
  r.details["composite_cells"] = composites;
  r.details["atom_cells"] = atoms;
  return r;
}

inline CheckReport check_regularity(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"regularity", "free categories on these complexes are Theta-regular and hypercancellative"};
  std::size_t maps = 0, pairs = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace& s, json& d) {
    auto reg = check_theta_regular(s, t.size());
    auto hc = check_hypercancellative(t);
    maps += reg.maps;
    pairs += hc.pairs;
    d["maps"] = reg.maps;
    d["pairs"] = hc.pairs;
    if (!reg.ok) d["theta_regular_failure"] = reg.failure;
    if (!hc.ok) d["hypercancellative_failure"] = hc.witness;
    return detail::pass_if(reg.ok && hc.ok);
  });
  r.details["maps"] = maps;
  r.details["pairs"] = pairs;
  return r;
}

// With `points`, each non-collapsed point gets its own verdict entry.
inline CheckReport check_prop_level_all(const std::vector<Target>& targets, const CheckOptions& opt = {},
                                        bool points_detail = false) {
  CheckReport r{points_detail ? "fibers" : "prop-level", "every fiber of the collapse map is contractible"};
  std::size_t points = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace& s, json& d) {
    auto res = check_prop_level(s, opt.shape_budget, {opt.core_reduce, 5'000'000});
    points += res.points;
    d["points"] = res.points;
    d["collapsed"] = res.collapsed;
    d["with_minimum"] = res.with_minimum;
    d["big_cell"] = res.has_big_cell ? (res.big_cell_atomic ? "atomic" : "composite") : "none";
    if (!res.big_fiber_homology.empty()) d["big_fiber_homology"] = res.big_fiber_homology;
    if (res.skipped) d["skipped_over_shape_budget"] = res.skipped;
    if (!res.ok) d["failure"] = res.failure;
    if (points_detail) {
      json pts = json::array();
      for (const auto& v : res.verdicts) {
        json pj{{"shape", v.shape}, {"composite", cell_label(t.complex(), t.cell(v.composite))}, {"kind", v.kind}, {"ok", v.ok}};
        if (!v.detail.empty()) pj["detail"] = v.detail;
        pts.push_back(std::move(pj));
      }
      d["non_collapsed_points"] = std::move(pts);
    }
    return detail::pass_if(res.ok);
  });
  r.details["points"] = points;
  return r;
}

inline CheckReport check_cocart_all(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"cocart", "merging functors between decomposition posets are cocartesian fibrations"};
  std::size_t instances = 0;
  detail::per_target(r, targets, opt, [&](const Target&, const CellTable& t, DecompSpace& s, json& d) {
    bool ok = true;
    json failures = json::array();
    std::size_t here = 0;
    for (CellId c : select_cells(t, opt.cell))
      for (const auto& in : cocartesian_instances(t.complex(), t.cell(c))) {
        ++here;
        auto res = check_cocartesian(s, c, in.from, in.to);
        if (!res.ok) {
          ok = false;
          failures.push_back(
              {{"cell", cell_label(t.complex(), t.cell(c))}, {"lemma", in.lemma}, {"k", in.k}, {"why", res.failure}});
        }
      }
    instances += here;
    d["instances"] = here;
    if (!failures.empty()) d["failures"] = failures;
    return detail::pass_if(ok);
  });
  r.details["instances"] = instances;
  return r;
}

// Wedge factors drawn from the targets: every sink of the left factor
// against every source of the right one.
inline CheckReport check_wedge_all(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"wedge", "homs of a wedge are products of homs through the wedge point"};
  std::size_t pairs = 0;
  json failures = json::array();
  for (const auto& tg : targets) r.inputs.emplace_back(tg.label, complex_hash(tg.complex));
  try {
    for (const auto& a : targets)
      for (const auto& b : targets) {
        if (a.complex.empty() || b.complex.empty()) continue;
        for (AtomIndex sk : sinks(a.complex))
          for (AtomIndex sc : sources(b.complex)) {
            auto res = check_wedge_homs(a.complex, a.complex.id(sk), b.complex, b.complex.id(sc), {opt.max_cells});
            ++pairs;
            if (!res.ok) {
              r.verdict = Verdict::fail;
              failures.push_back({{"left", a.label}, {"sink", a.complex.id(sk)}, {"right", b.label},
                                  {"source", b.complex.id(sc)}, {"why", res.failure}});
            }
          }
      }
  } catch (const BudgetError& e) {
    r.verdict = Verdict::budget;
    r.details["error"] = e.what();
  }
  r.details["wedges"] = pairs;
  if (!failures.empty()) r.details["failures"] = failures;
  return r;
}

struct LawCounts {
  std::size_t associativity = 0;
  std::size_t interchange = 0;
  std::vector<std::string> failures;
};

// Associativity and interchange over every composable tuple of cells.
inline LawCounts check_cell_laws(const CellTable& t) {
  LawCounts r;
  const int n = t.complex().dim();
  auto fail = [&](std::string s) {
    if (r.failures.size() < 10) r.failures.push_back(std::move(s));
  };
  for (int i = 0; i < n; ++i) {
    std::map<CellId, std::vector<CellId>> by_src;
    for (CellId b = 0; b < t.size(); ++b) by_src[t.bd(b, Sign::minus, i)].push_back(b);
    // Pairs composable along i, units included.
    std::vector<std::tuple<CellId, CellId, CellId>> pairs;  // (a, b, b ∘ a)
    for (CellId a = 0; a < t.size(); ++a)
      for (CellId b : by_src[t.bd(a, Sign::plus, i)]) {
        auto ab = t.compose(b, a, i);
        if (!ab) {
          fail("missing composite along " + std::to_string(i));
          continue;
        }
        pairs.emplace_back(a, b, *ab);
        for (CellId c : by_src[t.bd(b, Sign::plus, i)]) {
          auto bc = t.compose(c, b, i);
          if (!bc) continue;
          ++r.associativity;
          auto l = t.compose(c, *ab, i), rr = t.compose(*bc, a, i);
          if (!l || !rr || *l != *rr) fail("associativity fails along " + std::to_string(i));
        }
      }
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::tuple<CellId, CellId, CellId>> jp;
      std::map<CellId, std::vector<CellId>> by_src_j;
      for (CellId b = 0; b < t.size(); ++b) by_src_j[t.bd(b, Sign::minus, j)].push_back(b);
      for (CellId a = 0; a < t.size(); ++a)
        for (CellId b : by_src_j[t.bd(a, Sign::plus, j)])
          if (auto ab = t.compose(b, a, j)) jp.emplace_back(a, b, *ab);
      // (d ∘_j c) ∘_i (b ∘_j a) = (d ∘_i b) ∘_j (c ∘_i a)
      for (auto [a, b, x] : jp)
        for (auto [c, dd, y] : jp) {
          auto yx = t.compose(y, x, i);
          if (!yx) continue;
          auto ca = t.compose(c, a, i), db = t.compose(dd, b, i);
          if (!ca || !db) continue;
          ++r.interchange;
          auto rhs = t.compose(*db, *ca, j);
          if (!rhs || *rhs != *yx) fail("interchange fails along " + std::to_string(i) + ", " + std::to_string(j));
        }
    }
  }
  return r;
}

inline CheckReport check_cell_laws_all(const std::vector<Target>& targets, const CheckOptions& opt = {}) {
  CheckReport r{"cell-laws", "composition of cells is associative, satisfies interchange, and cells are determined by support"};
  detail::per_target(r, targets, opt, [&](const Target& tg, const CellTable& t, DecompSpace&, json& d) {
    auto laws = check_cell_laws(t);
    d["associativity"] = laws.associativity;
    d["interchange"] = laws.interchange;
    std::set<Bitset> supports;
    bool injective = true;
    for (const auto& c : t.cells()) injective = supports.insert(c.support()).second && injective;
    CellTable lifo(tg.complex, {opt.max_cells, Traversal::lifo});
    bool same_order = lifo.cells() == t.cells();
    auto comp_set = [](const CellTable& x) {
      std::set<std::tuple<int, CellId, CellId, CellId>> out;
      for (const auto& c : x.compositions()) out.emplace(c.i, c.a, c.b, c.result);
      return out;
    };
    bool same_comps = comp_set(lifo) == comp_set(t);
    bool all_cells = std::all_of(t.cells().begin(), t.cells().end(), [&](const Cell& c) { return bool(is_cell(t.complex(), c)); });
    d["support_injective"] = injective;
    d["traversal_independent"] = same_order && same_comps;
    d["cells_valid"] = all_cells;
    if (!laws.failures.empty()) d["failures"] = laws.failures;
    return detail::pass_if(laws.failures.empty() && injective && same_order && same_comps && all_cells);
  });
  return r;
}

inline json report_to_json(const CheckReport& r, double millis) {
  json inputs = json::array();
  for (const auto& [label, h] : r.inputs) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    inputs.push_back({{"label", label}, {"hash", buf}});
  }
  return json{{"command", r.name},
              {"claim", r.claim},
              {"inputs", std::move(inputs)},
              {"verdict", verdict_name(r.verdict)},
              {"details", r.details},
              {"timing", {{"ms", millis}}}};
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"thm-a",      "disc-sphere", "iso-sd", "dc-contract", "pos-iso",  "exists-min",
                                              "regularity", "prop-level",  "fibers", "cocart",      "wedge",    "cell-laws"};
  return names;
}

// Dispatch by name; targets are only consulted by the checks that use them.
inline CheckReport run_check(const std::string& name, const std::vector<Target>& targets, const CheckOptions& opt) {
  if (name == "thm-a") return check_thm_a(targets, opt);
  if (name == "disc-sphere") return check_disc_sphere(opt);
  if (name == "iso-sd") return check_iso_sd(opt);
  if (name == "dc-contract") return check_dc_contract(opt);
  if (name == "pos-iso") return check_pos_iso_all(targets, opt);
  if (name == "exists-min") return check_exists_min(targets, opt);
  if (name == "regularity") return check_regularity(targets, opt);
  if (name == "prop-level") return check_prop_level_all(targets, opt);
  if (name == "fibers") return check_prop_level_all(targets, opt, true);
  if (name == "cocart") return check_cocart_all(targets, opt);
  if (name == "wedge") return check_wedge_all(targets, opt);
  if (name == "cell-laws") return check_cell_laws_all(targets, opt);
  throw InputError("unknown check '" + name + "'");
}

inline bool check_uses_targets(const std::string& name) {
  return name != "disc-sphere" && name != "iso-sd" && name != "dc-contract";
}

}  // namespace tfc
