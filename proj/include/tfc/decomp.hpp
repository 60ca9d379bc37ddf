#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tfc/cell_table.hpp"
#include "tfc/poset.hpp"
#include "tfc/theta.hpp"

namespace tfc {

using ElemId = std::uint32_t;

// Which ∘_k splittings a decomposition may use: bit k set allows r ≥ 2 at
// level k.
using LevelMask = std::uint64_t;
inline constexpr LevelMask all_levels = ~LevelMask{0};

inline LevelMask mask_of(const DimSet& s) {
  LevelMask m = 0;
  for (int d : s)
    if (d >= 0 && d < 64) m |= LevelMask{1} << d;
  return m;
}

inline DimSet interval(int lo, int hi) {
  DimSet s;
  for (int d = lo; d <= hi; ++d) s.insert(d);
  return s;
}

// A node of a decomposition tree. At level k it splits `cell` (an element of
// a k-fold hom) as an ∘_k composite of its factors; a leaf is a cell of
// dimension exactly k, i.e. an object of that hom.
struct DecompNode {
  CellId cell;
  int level;
  std::vector<ElemId> factors;  // empty for a leaf

  bool leaf() const { return factors.empty(); }
};

// Spec-level view of one decomposition.
struct Decomposition {
  ElemId root = 0;
  ThetaTerm term;
  std::vector<std::pair<std::string, CellId>> generators;  // named as in term_to_complex
  std::vector<CellId> image;                               // sorted
};

// Hash-consed decomposition trees over one cell table, with memoized
// enumeration and images.
class DecompSpace {
 public:
  explicit DecompSpace(const CellTable& t, std::size_t budget = 5'000'000) : t_(&t), budget_(budget) {}

  const CellTable& table() const { return *t_; }
  std::size_t size() const { return nodes_.size(); }
  const DecompNode& node(ElemId e) const { return nodes_[e]; }
  CellId cell(ElemId e) const { return nodes_[e].cell; }

  ElemId make(CellId c, int level, std::vector<ElemId> factors) {
    auto key = std::make_tuple(c, level, factors);
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    if (nodes_.size() >= budget_)
      throw BudgetError("decomposition enumeration exceeded " + std::to_string(budget_) + " nodes");
    auto id = static_cast<ElemId>(nodes_.size());
    nodes_.push_back({c, level, std::move(factors)});
    intern_.emplace(std::move(key), id);
    return id;
  }

  // All decompositions of c at level k (dim c ≥ k) whose splittings respect
  // the mask.
  const std::vector<ElemId>& decomps(CellId c, int k, LevelMask mask = all_levels) {
    auto key = std::make_tuple(c, k, mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<ElemId> out;
    if (t_->dim(c) <= k) {
      out.push_back(make(c, k, {}));
    } else {
      for (const auto& seq : sequences(c, k, mask)) {
        std::vector<std::vector<ElemId>> choices;
        for (CellId f : seq) choices.push_back(decomps(f, k + 1, mask));
        std::vector<ElemId> pick(seq.size());
        product(choices, 0, pick, [&] { out.push_back(make(c, k, pick)); });
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  // The trivial decomposition: one factor at every level.
  ElemId globe_chain(CellId c, int k) {
    if (t_->dim(c) <= k) return make(c, k, {});
    return make(c, k, {globe_chain(c, k + 1)});
  }

  ThetaTerm term(ElemId e) const {
    ThetaTerm t;
    for (ElemId f : nodes_[e].factors) t.children.push_back(term(f));
    return t;
  }

  std::vector<std::pair<std::string, CellId>> generators(ElemId e) const {
    std::vector<std::pair<std::string, CellId>> out;
    collect_generators(e, "", out);
    return out;
  }

  // Cells of the image of the classified map, as a sorted vector.
  const std::vector<CellId>& image(ElemId e) { return info(e).cells; }
  // Injective on cells at every level.
  bool monic(ElemId e) { return info(e).monic; }
  // Every generator has the dimension its position requires.
  bool nondegenerate(ElemId e) const {
    const auto& n = nodes_[e];
    if (n.leaf()) return t_->dim(n.cell) == n.level;
    for (ElemId f : n.factors)
      if (!nondegenerate(f)) return false;
    return true;
  }

  Bitset image_set(ElemId e) {
    Bitset b(t_->size());
    for (CellId c : image(e)) b.set(c);
    return b;
  }

  Decomposition describe(ElemId e) { return {e, term(e), generators(e), image(e)}; }

  // D: forward m-boundary of a decomposition.
  ElemId boundary(ElemId e, int m) {
    const DecompNode n = nodes_[e];
    if (n.level >= m) return make(t_->bd(n.cell, Sign::plus, m), n.level, {});
    if (n.leaf()) return e;
    std::vector<ElemId> fs;
    for (ElemId f : n.factors) fs.push_back(boundary(f, m));
    return make(t_->bd(n.cell, Sign::plus, m), n.level, std::move(fs));
  }

  // U: composes every ∘_i splitting with i ≥ m.
  ElemId merge_from(ElemId e, int m) {
    const DecompNode n = nodes_[e];
    if (n.level >= m) return globe_chain(n.cell, n.level);
    if (n.leaf()) return e;
    std::vector<ElemId> fs;
    for (ElemId f : n.factors) fs.push_back(merge_from(f, m));
    return make(n.cell, n.level, std::move(fs));
  }

 private:
  struct Info {
    bool done = false;
    bool monic = true;
    std::vector<CellId> cells;
  };

  template <class F>
  static void product(const std::vector<std::vector<ElemId>>& choices, std::size_t j, std::vector<ElemId>& pick, F&& f) {
    if (j == choices.size()) {
      f();
      return;
    }
    for (ElemId e : choices[j]) {
      pick[j] = e;
      product(choices, j + 1, pick, f);
    }
  }

  // Sequences (f_1, ..., f_r) of cells of dimension > k with
  // f_r ∘_k ... ∘_k f_1 = c; only r = 1 when level k is masked out.
  std::vector<std::vector<CellId>> sequences(CellId c, int k, LevelMask mask) const {
    std::vector<std::vector<CellId>> out{{c}};
    if (k >= 64 || !(mask >> k & 1u)) return out;
    for (auto [a, b] : t_->splits(c, k))
      for (auto& rest : sequences(b, k, mask)) {
        std::vector<CellId> s{a};
        s.insert(s.end(), rest.begin(), rest.end());
        out.push_back(std::move(s));
      }
    return out;
  }

  void collect_generators(ElemId e, const std::string& prefix, std::vector<std::pair<std::string, CellId>>& out) const {
    const auto& n = nodes_[e];
    if (n.leaf()) {
      out.emplace_back(prefix + "v0", n.cell);
      return;
    }
    out.emplace_back(prefix + "v0", t_->bd(nodes_[n.factors.front()].cell, Sign::minus, n.level));
    for (std::size_t j = 0; j < n.factors.size(); ++j)
      out.emplace_back(prefix + "v" + std::to_string(j + 1), t_->bd(nodes_[n.factors[j]].cell, Sign::plus, n.level));
    for (std::size_t j = 0; j < n.factors.size(); ++j)
      collect_generators(n.factors[j], prefix + "c" + std::to_string(j) + ".", out);
  }

  const Info& info(ElemId e) {
    if (infos_.size() <= e) infos_.resize(nodes_.size());
    if (infos_[e].done) return infos_[e];
    Info r;
    const DecompNode n = nodes_[e];
    if (n.leaf()) {
      r.cells = {n.cell};
    } else {
      const std::size_t m = n.factors.size();
      std::vector<std::vector<CellId>> homs;
      for (ElemId f : n.factors) {
        const Info& fi = info(f);
        r.monic = r.monic && fi.monic;
        homs.push_back(fi.cells);
      }
      r.cells.push_back(t_->bd(nodes_[n.factors.front()].cell, Sign::minus, n.level));
      for (ElemId f : n.factors) r.cells.push_back(t_->bd(nodes_[f].cell, Sign::plus, n.level));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
          std::vector<std::vector<CellId>> span(homs.begin() + static_cast<std::ptrdiff_t>(i),
                                                homs.begin() + static_cast<std::ptrdiff_t>(j));
          auto comp = composite_tuples(*t_, n.level, span);
          if (!comp) throw std::logic_error("decomposition factors are not composable");
          r.cells.insert(r.cells.end(), comp->begin(), comp->end());
        }
      const std::size_t total = r.cells.size();
      std::sort(r.cells.begin(), r.cells.end());
      r.cells.erase(std::unique(r.cells.begin(), r.cells.end()), r.cells.end());
      if (r.cells.size() != total) r.monic = false;
    }
    r.done = true;
    infos_[e] = std::move(r);
    return infos_[e];
  }

  const CellTable* t_;
  std::size_t budget_;
  std::deque<DecompNode> nodes_;
  std::map<std::tuple<CellId, int, std::vector<ElemId>>, ElemId> intern_;
  std::map<std::tuple<CellId, int, LevelMask>, std::vector<ElemId>> memo_;
  std::deque<Info> infos_;  // deque: references survive growth
};

// Θ-shaped subcategories of F(P) containing μ as their composite, ordered by
// containment. Decompositions of μ only involve cells supported in the
// closure of μ, so the ambient is that closure whatever table is used.
struct DecompPoset {
  CellId mu = 0;
  std::optional<DimSet> restriction;  // nullopt: all of Θ
  bool keep_bottom = true;
  std::vector<ElemId> elems;  // sorted by (image size, image)
  std::vector<ThetaTerm> terms;
  std::vector<std::vector<CellId>> images;
  std::vector<Bitset> image_sets;
  FinPoset order;
  bool all_monic = true;
  bool rigid = true;  // equal images came with equal terms

  std::size_t size() const { return elems.size(); }
  std::optional<std::size_t> find(const std::vector<CellId>& image) const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] == image) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> find_elem(DecompSpace& s, ElemId e) const { return find(s.image(e)); }
};

namespace detail {
inline DecompPoset build_poset(DecompSpace& s, CellId mu, const std::vector<ElemId>& raw, std::optional<DimSet> restriction,
                               bool keep_bottom) {
  DecompPoset p;
  p.mu = mu;
  p.restriction = std::move(restriction);
  p.keep_bottom = keep_bottom;
  const auto& bottom_image = s.image(s.globe_chain(mu, 0));
  std::map<std::vector<CellId>, ElemId> by_image;
  for (ElemId e : raw) {
    if (!s.monic(e) || !s.nondegenerate(e)) p.all_monic = false;
    const auto& img = s.image(e);
    if (!keep_bottom && img == bottom_image) continue;
    auto [it, fresh] = by_image.emplace(img, e);
    if (!fresh && s.term(it->second) != s.term(e)) p.rigid = false;
  }
  std::vector<std::pair<std::vector<CellId>, ElemId>> sorted(by_image.begin(), by_image.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<std::string> labels;
  for (auto& [img, e] : sorted) {
    p.elems.push_back(e);
    p.terms.push_back(s.term(e));
    p.image_sets.push_back(s.image_set(e));
    p.images.push_back(img);
    labels.push_back(std::to_string(labels.size()) + ":" + to_string(p.terms.back()));
  }
  FinPreorder q(std::move(labels));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.image_sets[a].subset_of(p.image_sets[b])) q.add(a, b);
  p.order = FinPoset(std::move(q));
  return p;
}
}  // namespace detail

// Sd^◁(μ) (keep_bottom) or Sd(μ); with a restriction S, Decompatbot_S(μ)
// or Decompat_S(μ), enumerated by the restricted recursion.
inline DecompPoset enumerate_sd(DecompSpace& s, CellId mu, std::optional<DimSet> restriction = std::nullopt,
                                bool keep_bottom = true) {
  LevelMask m = restriction ? mask_of(*restriction) : all_levels;
  const auto raw = s.decomps(mu, 0, m);
  return detail::build_poset(s, mu, raw, std::move(restriction), keep_bottom);
}

// The same poset, obtained from the unrestricted enumeration by filtering on
// used_dims(term) ⊆ S.
inline DecompPoset filter_sd(DecompSpace& s, CellId mu, const DimSet& restriction, bool keep_bottom = true) {
  std::vector<ElemId> raw;
  for (ElemId e : s.decomps(mu, 0)) {
    auto used = used_dims(s.term(e));
    if (std::includes(restriction.begin(), restriction.end(), used.begin(), used.end())) raw.push_back(e);
  }
  return detail::build_poset(s, mu, raw, restriction, keep_bottom);
}

struct AtPreorder {
  int k = 0;
  std::vector<AtomIndex> carrier;
  FinPreorder relation;
};

// At_k(μ) on (∂_k μ)_k: equivalent when both lie in (∂_k <c>)_k for an atom
// c of dimension > k under μ; a ≤ b when a ◁_{k-1} b.
inline AtPreorder at_preorder(const Complex& p, const Cell& mu, int k) {
  const Cell m = reduced(mu);
  if (k < 1 || k > m.dim()) throw InputError("At_k needs 1 <= k <= dim mu");
  AtPreorder at;
  at.k = k;
  for (auto a : m.plus(k).elements()) at.carrier.push_back(static_cast<AtomIndex>(a));
  std::vector<std::string> labels;
  std::map<AtomIndex, std::size_t> pos;
  for (AtomIndex a : at.carrier) {
    pos[a] = labels.size();
    labels.push_back(p.id(a));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const Bitset under = closure(p, m.support()).members;
  under.for_each([&](std::size_t c) {
    auto ci = static_cast<AtomIndex>(c);
    if (p.dim(ci) < k + 1) return;
    std::vector<std::size_t> group;
    (atom_cell(p, ci).plus(k) & m.plus(k)).for_each([&](std::size_t a) { group.push_back(pos.at(static_cast<AtomIndex>(a))); });
    for (std::size_t g = 1; g < group.size(); ++g) {
      pairs.emplace_back(group[0], group[g]);
      pairs.emplace_back(group[g], group[0]);
    }
  });
  for (AtomIndex a : at.carrier)
    for (AtomIndex b : at.carrier)
      if (p.plus(a).intersects(p.minus(b))) pairs.emplace_back(pos[a], pos[b]);
  at.relation = FinPreorder::generated(std::move(labels), pairs);
  return at;
}

// Largest k in [1, dim μ] with At_k(μ) not an equivalence relation.
inline std::optional<int> exists_min_k(const Complex& p, const Cell& mu) {
  const Cell m = reduced(mu);
  for (int k = m.dim(); k >= 1; --k)
    if (!at_preorder(p, m, k).relation.is_equivalence()) return k;
  return std::nullopt;
}

// At_i(μ) is an equivalence relation for every i in [from, dim μ].
inline bool at_equivalences_from(const Complex& p, const Cell& mu, int from) {
  const Cell m = reduced(mu);
  for (int i = std::max(from, 1); i <= m.dim(); ++i)
    if (!at_preorder(p, m, i).relation.is_equivalence()) return false;
  return true;
}

// L_k^μ(θ) for θ ∈ Decompat_{[0,k-1]}(μ), on the carrier of At_k(μ).
inline FinPreorder L_map(DecompSpace& s, ElemId e, int k) {
  const CellTable& t = s.table();
  const Complex& p = t.complex();
  const CellId mu = s.cell(e);
  auto used = used_dims(s.term(e));
  if (!used.empty() && *used.rbegin() >= k) throw InputError("decomposition uses composition in dimension >= k");
  auto at = at_preorder(p, t.cell(mu), k);
  std::map<AtomIndex, std::size_t> pos;
  for (std::size_t i = 0; i < at.carrier.size(); ++i) pos[at.carrier[i]] = i;
  // Level-k leaves of the boundary decomposition are the k-boundaries of
  // the generators.
  std::vector<CellId> gens;
  std::vector<ElemId> stack{s.boundary(e, k)};
  while (!stack.empty()) {
    ElemId x = stack.back();
    stack.pop_back();
    const auto& n = s.node(x);
    if (n.leaf()) {
      if (n.level == k) gens.push_back(n.cell);
    } else {
      for (ElemId f : n.factors) stack.push_back(f);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto members = [&](CellId g) {
    std::vector<std::size_t> out;
    t.cell(g).plus(k).for_each([&](std::size_t a) {
      if (auto it = pos.find(static_cast<AtomIndex>(a)); it != pos.end()) out.push_back(it->second);
    });
    return out;
  };
  for (CellId g : gens) {
    auto ms = members(g);
    for (std::size_t i = 1; i < ms.size(); ++i) {
      pairs.emplace_back(ms[0], ms[i]);
      pairs.emplace_back(ms[i], ms[0]);
    }
  }
  for (CellId a : gens)
    for (CellId b : gens)
      if (a != b && t.bd(a, Sign::plus, k - 1) == t.bd(b, Sign::minus, k - 1)) {
        auto ma = members(a), mb = members(b);
        if (!ma.empty() && !mb.empty()) pairs.emplace_back(ma[0], mb[0]);
      }
  return FinPreorder::generated(at.relation.labels(), pairs);
}

struct CheckResult {
  bool ok = true;
  std::string failure;
  std::size_t checked = 0;

  void fail(std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  }
};

// L_k^μ : Decompat_{k-1}(μ) → Lin(At_k(μ)) is an isomorphism of posets,
// with both sides enumerated independently.
struct PosIsoResult : CheckResult {
  std::size_t domain = 0;
  std::size_t codomain = 0;
};

inline PosIsoResult check_pos_iso(DecompSpace& s, CellId mu, int k) {
  const CellTable& t = s.table();
  const Complex& p = t.complex();
  const Cell& m = t.cell(mu);
  if (k < 1 || k > m.dim()) throw InputError("pos-iso needs 1 <= k <= dim mu");
  if (!at_equivalences_from(p, m, k + 1))
    throw HypothesisNotMet("At_i(mu) is not an equivalence relation for some i > " + std::to_string(k));
  PosIsoResult r;
  auto at = at_preorder(p, m, k);
  std::vector<FinPreorder> lins;
  for (const auto& blocks : ordered_partitions_refining(at.relation))
    if (blocks.size() >= 2) lins.push_back(preorder_of_blocks(at.relation.labels(), blocks));
  auto dom = enumerate_sd(s, mu, DimSet{k - 1}, false);
  r.domain = dom.size();
  r.codomain = lins.size();
  if (r.domain != r.codomain)
    r.fail("domain has " + std::to_string(r.domain) + " elements, Lin(At_k) has " + std::to_string(r.codomain));
  std::vector<FinPreorder> ls;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto l = L_map(s, dom.elems[i], k);
    ++r.checked;
    if (!l.is_total()) r.fail("L of element " + dom.order.label(i) + " is not linear");
    if (!l.contains(at.relation)) r.fail("L of element " + dom.order.label(i) + " does not refine At_k");
    if (l.is_codiscrete()) r.fail("L of element " + dom.order.label(i) + " is codiscrete");
    auto it = std::find(lins.begin(), lins.end(), l);
    if (it == lins.end()) {
      r.fail("L of element " + dom.order.label(i) + " is not in Lin(At_k)");
      continue;
    }
    auto idx = static_cast<std::size_t>(it - lins.begin());
    if (std::find(where.begin(), where.end(), idx) != where.end()) r.fail("L is not injective");
    where.push_back(idx);
    ls.push_back(std::move(l));
  }
  if (ls.size() == dom.size())
    for (std::size_t a = 0; a < dom.size(); ++a)
      for (std::size_t b = 0; b < dom.size(); ++b)
        if (dom.order.leq(a, b) != ls[a].contains(ls[b]))
          r.fail("order not preserved between " + dom.order.label(a) + " and " + dom.order.label(b));
  return r;
}

// The from-set must extend the to-set by levels above all of it.
inline int merge_level(const DimSet& from, const DimSet& to) {
  if (!std::includes(from.begin(), from.end(), to.begin(), to.end()))
    throw InputError("target dimension set is not contained in the source set");
  DimSet diff;
  std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::inserter(diff, diff.end()));
  if (diff.empty()) return 64;
  int m = *diff.begin();
  for (int d : to)
    if (d > m) throw InputError("target dimension set is not an initial segment of the source set");
  return m;
}

// U_from^to on a decomposition.
inline ElemId U_functor(DecompSpace& s, ElemId e, const DimSet& from, const DimSet& to) {
  int m = merge_level(from, to);
  return m >= 64 ? e : s.merge_from(e, m);
}

inline ElemId D_functor(DecompSpace& s, ElemId e, int m) { return s.boundary(e, m); }

// U : Decompatbot_from(μ) → Decompatbot_to(μ) is a cocartesian fibration:
// for x and y ≥ U(x), the set {z ≥ x : U(z) ≥ y} has a minimum lying over y.
struct CocartResult : CheckResult {
  std::size_t total = 0;
  std::size_t base = 0;
};

inline CocartResult check_cocartesian(DecompSpace& s, CellId mu, const DimSet& from, const DimSet& to) {
  merge_level(from, to);
  CocartResult r;
  auto E = enumerate_sd(s, mu, from, true);
  auto B = enumerate_sd(s, mu, to, true);
  r.total = E.size();
  r.base = B.size();
  std::vector<std::size_t> u(E.size());
  for (std::size_t x = 0; x < E.size(); ++x) {
    auto img = B.find_elem(s, U_functor(s, E.elems[x], from, to));
    if (!img) {
      r.fail("U of element " + E.order.label(x) + " is not in the base");
      return r;
    }
    u[x] = *img;
  }
  for (std::size_t x = 0; x < E.size(); ++x)
    for (std::size_t z = 0; z < E.size(); ++z)
      if (E.order.leq(x, z) && !B.order.leq(u[x], u[z])) r.fail("U is not monotone at " + E.order.label(x));
  for (std::size_t x = 0; x < E.size(); ++x)
    for (std::size_t y = 0; y < B.size(); ++y) {
      if (!B.order.leq(u[x], y)) continue;
      ++r.checked;
      std::vector<std::size_t> w;
      for (std::size_t z = 0; z < E.size(); ++z)
        if (E.order.leq(x, z) && B.order.leq(y, u[z])) w.push_back(z);
      std::optional<std::size_t> least;
      for (std::size_t z : w)
        if (std::all_of(w.begin(), w.end(), [&](std::size_t v) { return E.order.leq(z, v); })) least = z;
      if (!least || u[*least] != y)
        r.fail("no cocartesian lift of " + B.order.label(u[x]) + " -> " + B.order.label(y) + " at " + E.order.label(x));
    }
  return r;
}

// (from, to) pairs covered by the fibration lemmas for μ: [0,n-1] → [0,n-2]
// always, and [0,k] → [0,k-1], [0,n-1] → [0,k-1] for every k with At_i(μ)
// an equivalence relation for all i > k.
struct CocartInstance {
  std::string lemma;
  int k = 0;
  DimSet from;
  DimSet to;
};

inline std::vector<CocartInstance> cocartesian_instances(const Complex& p, const Cell& mu) {
  const int n = reduced(mu).dim();
  std::vector<CocartInstance> out;
  if (n < 1) return out;
  out.push_back({"cocart", n, interval(0, n - 1), interval(0, n - 2)});
  for (int k = 1; k <= n; ++k) {
    if (!at_equivalences_from(p, mu, k + 1)) continue;
    out.push_back({"cocart'", k, interval(0, k), interval(0, k - 1)});
    out.push_back({"cocart''", k, interval(0, n - 1), interval(0, k - 1)});
  }
  return out;
}

// Every nondegenerate map from a Θ object with at most gen_bound generators
// is injective on cells.
struct RegularityResult : CheckResult {
  std::size_t maps = 0;
  std::size_t skipped = 0;
};

inline RegularityResult check_theta_regular(DecompSpace& s, std::size_t gen_bound) {
  RegularityResult r;
  const CellTable& t = s.table();
  for (CellId b = 0; b < t.size(); ++b)
    for (ElemId e : s.decomps(b, 0)) {
      auto term = s.term(e);
      if (term.atom_count() > gen_bound) {
        ++r.skipped;
        continue;
      }
      ++r.maps;
      if (!s.nondegenerate(e)) r.fail("degenerate generator in a map of shape " + to_string(term));
      if (!s.monic(e)) r.fail("map of shape " + to_string(term) + " onto cell " + std::to_string(b) + " is not monic");
    }
  r.checked = r.maps;
  return r;
}

}  // namespace tfc
