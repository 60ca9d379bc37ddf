#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfc/decomp.hpp"
#include "tfc/homology.hpp"

namespace tfc {

enum class Level { Fn1, Fpartial };

inline const char* level_name(Level l) { return l == Level::Fn1 ? "F_{n-1}" : "F_partial"; }

// A nondegenerate map θ → F(P), given by a decomposition of its composite.
struct ThetaPoint {
  ElemId elem = 0;
  CellId composite = 0;
  ThetaTerm shape;
};

inline ThetaPoint theta_point(const DecompSpace& s, ElemId e) { return {e, s.cell(e), s.term(e)}; }

// F_{n-1}P = F(P_{≤n-1}) ∪ P_n and F_∂P = F_{n-1}P ∪ ⋃ F(P') over proper
// subcomplexes P'. A nondegenerate point lies in F_{n-1}P iff its composite
// has dimension < n or is an n-atom.
inline bool in_F_level(const DecompSpace& s, const ThetaPoint& t, Level level) {
  const CellTable& tab = s.table();
  const Complex& p = tab.complex();
  const int n = p.dim();
  const Cell& beta = tab.cell(t.composite);
  bool fn1 = beta.dim() <= n - 1;
  if (!fn1 && beta.dim() == n && beta.plus(n).count() == 1) fn1 = beta == atom_cell(p, static_cast<AtomIndex>(beta.plus(n).first()));
  if (level == Level::Fn1 || fn1) return fn1;
  return closure(p, beta.support()).members != p.all_atoms();
}

struct FiberPoset {
  ThetaPoint base;
  bool collapsed = false;
  std::vector<std::size_t> members;  // indices into `ambient`
  DecompPoset ambient;               // Sd^◁ of the composite
  FinPoset order;
  std::optional<std::size_t> minimum;  // index into members
};

// Fiber of the collapse map over a point: a single point if the point lies
// in F_∂P, otherwise the Θ-subcategories containing its image, other than
// the top-dimensional globe.
inline FiberPoset fiber(DecompSpace& s, const ThetaPoint& t) {
  FiberPoset f;
  f.base = t;
  if (in_F_level(s, t, Level::Fpartial)) {
    f.collapsed = true;
    return f;
  }
  const int n = s.table().complex().dim();
  f.ambient = enumerate_sd(s, t.composite, std::nullopt, true);
  const Bitset img = s.image_set(t.elem);
  const ThetaTerm globe = globe_term(n);
  Bitset keep(f.ambient.size());
  for (std::size_t i = 0; i < f.ambient.size(); ++i)
    if (img.subset_of(f.ambient.image_sets[i]) && f.ambient.terms[i] != globe) {
      f.members.push_back(i);
      keep.set(i);
    }
  f.order = subposet(f.ambient.order, keep);
  for (std::size_t a = 0; a < f.order.size(); ++a) {
    bool least = true;
    for (std::size_t b = 0; b < f.order.size() && least; ++b) least = f.order.leq(a, b);
    if (least) f.minimum = a;
  }
  return f;
}

struct PointVerdict {
  std::string shape;
  CellId composite = 0;
  std::string kind;  // "collapsed", "minimum", "big-cell"
  bool ok = true;
  std::string detail;
};

struct PropLevelReport : CheckResult {
  bool has_big_cell = false;
  bool big_cell_atomic = false;
  std::size_t points = 0;
  std::size_t collapsed = 0;
  std::size_t with_minimum = 0;
  std::size_t skipped = 0;
  std::string big_fiber_homology;
  std::vector<PointVerdict> verdicts;  // non-collapsed points only
};

// Every fiber over a nondegenerate injective point with at most
// shape_budget generators is contractible: collapsed, with a minimum, or
// (over the big cell) equal to Sd(μ) with trivial homology.
inline PropLevelReport check_prop_level(DecompSpace& s, std::size_t shape_budget, const HomologyOptions& hopt = {}) {
  PropLevelReport r;
  const CellTable& tab = s.table();
  auto big = big_cell(tab);
  r.has_big_cell = big.has_value();
  if (big) {
    ThetaPoint g{s.globe_chain(*big, 0), *big, {}};
    g.shape = s.term(g.elem);
    r.big_cell_atomic = in_F_level(s, g, Level::Fn1);
  }
  for (CellId b = 0; b < tab.size(); ++b)
    for (ElemId e : s.decomps(b, 0)) {
      ThetaPoint t = theta_point(s, e);
      if (t.shape.atom_count() > shape_budget) {
        ++r.skipped;
        continue;
      }
      if (!s.monic(e)) {
        r.fail("point of shape " + to_string(t.shape) + " is not injective");
        continue;
      }
      ++r.points;
      bool fn1 = in_F_level(s, t, Level::Fn1);
      bool fpart = in_F_level(s, t, Level::Fpartial);
      if (fn1 && !fpart) r.fail("F_{n-1} point outside F_partial");
      auto f = fiber(s, t);
      if (f.collapsed != fpart) r.fail("collapse flag disagrees with F_partial membership");
      if (f.collapsed) {
        ++r.collapsed;
        continue;
      }
      PointVerdict v{to_string(t.shape), b, {}, true, {}};
      const bool is_mu = s.image(e) == s.image(s.globe_chain(b, 0));
      if (!is_mu) {
        v.kind = "minimum";
        v.ok = f.minimum && f.ambient.images[f.members[*f.minimum]] == s.image(e);
        if (v.ok) ++r.with_minimum;
        else v.detail = "fiber has no minimum equal to the image of the point";
      } else {
        v.kind = "big-cell";
        auto sd = enumerate_sd(s, b, std::nullopt, false);
        std::vector<std::vector<CellId>> fib;
        for (auto i : f.members) fib.push_back(f.ambient.images[i]);
        if (fib != sd.images) {
          v.ok = false;
          v.detail = "fiber differs from Sd(mu)";
        }
        auto h = homology(f.order, hopt);
        r.big_fiber_homology = h.describe();
        if (!h.trivial()) {
          v.ok = false;
          v.detail += (v.detail.empty() ? "" : "; ") + std::string("homology ") + h.describe();
        }
      }
      if (!v.ok) r.fail("point of shape " + v.shape + ": " + v.detail);
      r.verdicts.push_back(std::move(v));
    }
  r.checked = r.points;
  return r;
}

}  // namespace tfc
