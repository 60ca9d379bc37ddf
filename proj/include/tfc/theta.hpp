#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfc/cell_table.hpp"
#include "tfc/complex.hpp"

namespace tfc {

// [] is the point; [t1, ..., tr] is Σt1 ∨ ... ∨ Σtr.
struct ThetaTerm {
  std::vector<ThetaTerm> children;

  friend bool operator==(const ThetaTerm&, const ThetaTerm&) = default;
  friend std::strong_ordering operator<=>(const ThetaTerm& a, const ThetaTerm& b) {
    const std::size_t n = std::min(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
    return a.children.size() <=> b.children.size();
  }

  int dim() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.dim() + 1);
    return d;
  }
  // Number of atoms of the associated complex.
  std::size_t atom_count() const {
    std::size_t n = children.size() + 1;
    for (const auto& c : children) n += c.atom_count();
    return n;
  }
};

using DimSet = std::set<int>;

inline nlohmann::json term_to_json(const ThetaTerm& t) {
  auto j = nlohmann::json::array();
  for (const auto& c : t.children) j.push_back(term_to_json(c));
  return j;
}

inline ThetaTerm term_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("theta term must be a nested JSON array");
  ThetaTerm t;
  for (const auto& c : j) t.children.push_back(term_from_json(c));
  return t;
}

inline ThetaTerm parse_term(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("cannot parse theta term: ") + e.what());
  }
  return term_from_json(j);
}

inline std::string to_string(const ThetaTerm& t) { return term_to_json(t).dump(); }

// n-fold nesting [[...[]...]].
inline ThetaTerm globe_term(int n) {
  ThetaTerm t;
  for (int k = 0; k < n; ++k) t = ThetaTerm{{t}};
  return t;
}

// Contains 0 when the root has at least two children, and 1 + d for each d
// used by a child.
inline DimSet used_dims(const ThetaTerm& t) {
  DimSet s;
  if (t.children.size() >= 2) s.insert(0);
  for (const auto& c : t.children)
    for (int d : used_dims(c)) s.insert(d + 1);
  return s;
}

namespace detail {
inline void term_atoms(const ThetaTerm& t, const std::string& prefix, int shift, std::vector<AtomSpec>& out,
                       const std::string& src, const std::string& tgt) {
  // Objects of this level become shift-dimensional atoms between src and tgt.
  const std::size_t r = t.children.size();
  for (std::size_t j = 0; j <= r; ++j) {
    AtomSpec a{prefix + "v" + std::to_string(j), shift, {}, {}};
    if (shift > 0) {
      a.minus = {src};
      a.plus = {tgt};
    }
    out.push_back(std::move(a));
  }
  for (std::size_t j = 0; j < r; ++j)
    term_atoms(t.children[j], prefix + "c" + std::to_string(j) + ".", shift + 1, out,
               prefix + "v" + std::to_string(j), prefix + "v" + std::to_string(j + 1));
}
}  // namespace detail

// The complex T with F(T) the denoted Θ object. Objects are v0..vr; the
// atoms of child j carry the prefix "c<j>." one dimension up.
inline Complex term_to_complex(const ThetaTerm& t) {
  std::vector<AtomSpec> atoms;
  detail::term_atoms(t, "", 0, atoms, "", "");
  std::stable_sort(atoms.begin(), atoms.end(), [](const AtomSpec& a, const AtomSpec& b) { return a.dim < b.dim; });
  return Complex(std::move(atoms), "theta" + to_string(t));
}

inline Complex suspend(const Complex& c) {
  std::vector<AtomSpec> atoms{{"-", 0, {}, {}}, {"+", 0, {}, {}}};
  auto re = [](const std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back("s." + s);
    return out;
  };
  for (const auto& a : c.specs()) {
    AtomSpec b{"s." + a.id, a.dim + 1, re(a.minus), re(a.plus)};
    if (a.dim == 0) {
      b.minus = {"-"};
      b.plus = {"+"};
    }
    atoms.push_back(std::move(b));
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const AtomSpec& a, const AtomSpec& b) { return a.dim < b.dim; });
  return Complex(std::move(atoms), c.name().empty() ? std::string{} : "suspend(" + c.name() + ")");
}

// A 0-atom no 1-atom leaves (sink) or enters (source).
inline bool is_sink(const Complex& c, AtomIndex v) {
  return c.dim(v) == 0 && c.cofaces(v, Sign::minus).none();
}
inline bool is_source(const Complex& c, AtomIndex v) {
  return c.dim(v) == 0 && c.cofaces(v, Sign::plus).none();
}

inline std::vector<AtomIndex> sinks(const Complex& c) {
  std::vector<AtomIndex> out;
  for (AtomIndex v : c.atoms_of_dim(0))
    if (is_sink(c, v)) out.push_back(v);
  return out;
}
inline std::vector<AtomIndex> sources(const Complex& c) {
  std::vector<AtomIndex> out;
  for (AtomIndex v : c.atoms_of_dim(0))
    if (is_source(c, v)) out.push_back(v);
  return out;
}

inline std::string wedge_left_id(const std::string& id) { return "l." + id; }
inline std::string wedge_right_id(const std::string& id, const std::string& source, const std::string& sink) {
  return id == source ? "l." + sink : "r." + id;
}

// Glues the sink of a to the source of b. Atoms are renamed "l.<id>" and
// "r.<id>"; the glued point keeps its left name.
inline Complex wedge(const Complex& a, const std::string& sink, const Complex& b, const std::string& source) {
  if (!is_sink(a, a.index(sink))) throw InputError("'" + sink + "' is not a sink 0-atom");
  if (!is_source(b, b.index(source))) throw InputError("'" + source + "' is not a source 0-atom");
  std::vector<AtomSpec> atoms;
  for (auto s : a.specs()) {
    s.id = wedge_left_id(s.id);
    for (auto& f : s.minus) f = wedge_left_id(f);
    for (auto& f : s.plus) f = wedge_left_id(f);
    atoms.push_back(std::move(s));
  }
  for (auto s : b.specs()) {
    if (s.id == source) continue;
    s.id = wedge_right_id(s.id, source, sink);
    for (auto& f : s.minus) f = wedge_right_id(f, source, sink);
    for (auto& f : s.plus) f = wedge_right_id(f, source, sink);
    atoms.push_back(std::move(s));
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const AtomSpec& x, const AtomSpec& y) { return x.dim < y.dim; });
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = "wedge(" + a.name() + "," + b.name() + ")";
  return Complex(std::move(atoms), std::move(name));
}

// Renames the atoms of a cell into another complex.
inline Cell transport(const Cell& x, const Complex& from, const Complex& to,
                      const std::function<std::string(const std::string&)>& rename) {
  Cell out(x.dim(), to.size());
  for (int i = 0; i <= x.dim(); ++i)
    for (Sign s : {Sign::minus, Sign::plus})
      x.at(s, i).for_each([&](std::size_t a) { out.at(s, i).set(to.index(rename(from.id(static_cast<AtomIndex>(a))))); });
  return out;
}

// A sub-ω-category of F(P) read `shift` dimensions down: its k-cells are
// cells of F(P) of intrinsic dimension ≤ k + shift in `cells`, and ∘_k is
// ∘_{k+shift} of F(P).
struct CategoryView {
  const CellTable* table = nullptr;
  int shift = 0;
  std::vector<CellId> cells;

  int dim(CellId c) const { return std::max(0, table->dim(c) - shift); }
  std::vector<CellId> objects() const {
    std::vector<CellId> out;
    for (CellId c : cells)
      if (table->dim(c) <= shift) out.push_back(c);
    return out;
  }
};

inline CategoryView whole_category(const CellTable& t) {
  CategoryView v{&t, 0, {}};
  for (CellId c = 0; c < t.size(); ++c) v.cells.push_back(c);
  return v;
}

// Hom-ω-category between two objects of a view.
inline CategoryView hom_category(const CategoryView& v, CellId x, CellId y) {
  CategoryView h{v.table, v.shift + 1, {}};
  for (CellId c : v.cells)
    if (v.table->bd(c, Sign::minus, v.shift) == x && v.table->bd(c, Sign::plus, v.shift) == y) h.cells.push_back(c);
  return h;
}

inline CategoryView hom_category(const CellTable& t, AtomIndex x, AtomIndex y) {
  return hom_category(whole_category(t), *t.atom_cell_id(x), *t.atom_cell_id(y));
}

// Composites c_{j-1} ∘ ... ∘ c_i over all tuples of cells of consecutive
// homs, along ∘_shift. Returns nullopt if some composite is undefined.
inline std::optional<std::vector<CellId>> composite_tuples(const CellTable& t, int shift,
                                                           const std::vector<std::vector<CellId>>& homs) {
  std::vector<CellId> acc = homs.front();
  for (std::size_t j = 1; j < homs.size(); ++j) {
    std::vector<CellId> next;
    next.reserve(acc.size() * homs[j].size());
    for (CellId a : acc)
      for (CellId b : homs[j]) {
        auto r = t.compose(b, a, shift);
        if (!r) return std::nullopt;
        next.push_back(*r);
      }
    acc = std::move(next);
  }
  return acc;
}

// The term whose free category is isomorphic to the view, if any. Objects
// must be totally ordered by nonempty homs with trivial endomorphisms and
// empty reverse homs, consecutive homs recognized recursively, and ∘_0
// composition a bijection from the product of consecutive homs onto each hom.
inline std::optional<ThetaTerm> theta_recognize(const CategoryView& v) {
  const CellTable& t = *v.table;
  auto objs = v.objects();
  if (objs.empty()) return std::nullopt;
  const std::size_t m = objs.size();
  std::vector<std::vector<CategoryView>> homs(m, std::vector<CategoryView>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) homs[i][j] = hom_category(v, objs[i], objs[j]);
  std::size_t total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (homs[i][i].cells.size() != 1) return std::nullopt;  // nontrivial endomorphism
    for (std::size_t j = 0; j < m; ++j) total += homs[i][j].cells.size();
  }
  if (total != v.cells.size()) return std::nullopt;
  // Order objects by the number of objects they reach.
  std::vector<std::size_t> reach(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && !homs[i][j].cells.empty()) ++reach[i];
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reach[a] > reach[b]; });
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      if (p == q) continue;
      bool nonempty = !homs[order[p]][order[q]].cells.empty();
      if (nonempty != (p < q)) return std::nullopt;
    }
  ThetaTerm out;
  for (std::size_t p = 0; p + 1 < m; ++p) {
    auto child = theta_recognize(homs[order[p]][order[p + 1]]);
    if (!child) return std::nullopt;
    out.children.push_back(std::move(*child));
  }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 2; q < m; ++q) {
      std::vector<std::vector<CellId>> factors;
      for (std::size_t l = p; l < q; ++l) factors.push_back(homs[order[l]][order[l + 1]].cells);
      auto comp = composite_tuples(t, v.shift, factors);
      if (!comp) return std::nullopt;
      std::vector<CellId> got = *comp;
      std::sort(got.begin(), got.end());
      if (std::adjacent_find(got.begin(), got.end()) != got.end()) return std::nullopt;
      std::vector<CellId> want = homs[order[p]][order[q]].cells;
      std::sort(want.begin(), want.end());
      if (got != want) return std::nullopt;
    }
  return out;
}

inline std::optional<ThetaTerm> theta_recognize(const CellTable& t) { return theta_recognize(whole_category(t)); }

// b ∘_i a = b' ∘_i a' with ∂_i a = ∂_i a' forces a = a', b = b'. Checked over
// all composable pairs, units included.
struct HypercancelResult {
  bool ok = true;
  std::size_t pairs = 0;
  std::string witness;
};

inline HypercancelResult check_hypercancellative(const CellTable& t, std::size_t budget = 50'000'000) {
  HypercancelResult r;
  const int n = t.complex().dim();
  for (int i = 0; i < n; ++i) {
    std::map<std::tuple<CellId, CellId>, std::pair<CellId, CellId>> seen;  // (middle, composite) -> (a, b)
    std::map<CellId, std::vector<CellId>> by_src;
    for (CellId b = 0; b < t.size(); ++b) by_src[t.bd(b, Sign::minus, i)].push_back(b);
    for (CellId a = 0; a < t.size(); ++a) {
      CellId w = t.bd(a, Sign::plus, i);
      for (CellId b : by_src[w]) {
        if (++r.pairs > budget) throw BudgetError("hypercancellativity check exceeded pair budget");
        auto c = t.compose(b, a, i);
        if (!c) {
          r.ok = false;
          r.witness = "composite of cells " + std::to_string(a) + ", " + std::to_string(b) + " along " +
                      std::to_string(i) + " missing from enumeration";
          return r;
        }
        auto [it, fresh] = seen.emplace(std::make_tuple(w, *c), std::make_pair(a, b));
        if (!fresh) {
          r.ok = false;
          r.witness = "cell " + std::to_string(*c) + " = " + std::to_string(b) + "∘" + std::to_string(i) + " " +
                      std::to_string(a) + " = " + std::to_string(it->second.second) + "∘" + std::to_string(i) + " " +
                      std::to_string(it->second.first);
          return r;
        }
      }
    }
  }
  return r;
}

// Fact wedge: in F(a ∨ b), with w the wedge point, Hom(p, q) is the ∘_0
// product Hom_a(p, w) × Hom_b(w, q) for p in a and q in b, homs back from b
// to a are empty away from w, and both sides are full subcategories.
struct WedgeResult {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string failure;
};

inline WedgeResult check_wedge_homs(const Complex& a, const std::string& sink, const Complex& b,
                                    const std::string& source, const EnumerateOptions& opt = {}) {
  WedgeResult r;
  Complex w = wedge(a, sink, b, source);
  CellTable ta(a, opt), tb(b, opt), tw(w, opt);
  auto left = [&](const std::string& s) { return wedge_left_id(s); };
  auto right = [&](const std::string& s) { return wedge_right_id(s, source, sink); };
  auto hom_w = [&](CellId x, CellId y) {
    auto cells = hom_category(whole_category(tw), x, y).cells;
    std::sort(cells.begin(), cells.end());
    return cells;
  };
  auto obj_w = [&](const Complex& c, AtomIndex v, auto rename) { return *tw.atom_cell_id(w.index(rename(c.id(v)))); };
  auto fail = [&](std::string msg) {
    r.ok = false;
    if (r.failure.empty()) r.failure = std::move(msg);
  };
  auto full = [&](const Complex& c, const CellTable& tc, auto rename, const char* side) {
    for (AtomIndex p : c.atoms_of_dim(0))
      for (AtomIndex q : c.atoms_of_dim(0)) {
        ++r.pairs_checked;
        std::vector<CellId> want;
        for (CellId x : hom_category(tc, p, q).cells) want.push_back(tw.id_of(transport(tc.cell(x), c, w, rename)));
        std::sort(want.begin(), want.end());
        if (want != hom_w(obj_w(c, p, rename), obj_w(c, q, rename)))
          fail(std::string(side) + " hom(" + c.id(p) + ", " + c.id(q) + ") is not preserved");
      }
  };
  full(a, ta, left, "left");
  full(b, tb, right, "right");
  AtomIndex wa = a.index(sink), wb = b.index(source);
  for (AtomIndex p : a.atoms_of_dim(0))
    for (AtomIndex q : b.atoms_of_dim(0)) {
      if (p == wa && q == wb) continue;
      ++r.pairs_checked;
      CellId pw = obj_w(a, p, left), qw = obj_w(b, q, right);
      std::vector<CellId> lhs = hom_category(ta, p, wa).cells, rhs = hom_category(tb, wb, q).cells;
      std::vector<std::vector<CellId>> factors(2);
      for (CellId x : lhs) factors[0].push_back(tw.id_of(transport(ta.cell(x), a, w, left)));
      for (CellId x : rhs) factors[1].push_back(tw.id_of(transport(tb.cell(x), b, w, right)));
      auto comp = composite_tuples(tw, 0, factors);
      if (!comp) {
        fail("composite undefined for hom(" + a.id(p) + ", " + b.id(q) + ")");
        continue;
      }
      auto got = *comp;
      std::sort(got.begin(), got.end());
      if (std::adjacent_find(got.begin(), got.end()) != got.end())
        fail("product map not injective for hom(" + a.id(p) + ", " + b.id(q) + ")");
      got.erase(std::unique(got.begin(), got.end()), got.end());
      if (got != hom_w(pw, qw)) fail("hom(" + a.id(p) + ", " + b.id(q) + ") is not the product");
      if (!hom_w(qw, pw).empty()) fail("hom(" + b.id(q) + ", " + a.id(p) + ") is nonempty");
    }
  return r;
}

}  // namespace tfc
