#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tfc/bitset.hpp"
#include "tfc/errors.hpp"

namespace tfc {

// Finite preorder: up(i) holds the j with i ≤ j.
class FinPreorder {
 public:
  FinPreorder() = default;

  // Discrete preorder on the given labels.
  explicit FinPreorder(std::vector<std::string> labels) : labels_(std::move(labels)) {
    const auto n = labels_.size();
    up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) up_[i].set(i);
  }

  // Reflexive-transitive closure of the given pairs (i ≤ j).
  static FinPreorder generated(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    FinPreorder p(std::move(labels));
    for (auto [i, j] : pairs) {
      if (i >= p.size() || j >= p.size()) throw InputError("relation index out of range");
      p.up_[i].set(j);
    }
    p.close();
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  const Bitset& up(std::size_t i) const { return up_[i]; }
  Bitset down(std::size_t i) const {
    Bitset d(size());
    for (std::size_t j = 0; j < size(); ++j)
      if (leq(j, i)) d.set(j);
    return d;
  }

  void add(std::size_t i, std::size_t j) { up_[i].set(j); }

  // Warshall on bitset rows.
  void close() {
    const auto n = size();
    for (std::size_t i = 0; i < n; ++i) up_[i].set(i);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up_[i].test(k)) up_[i] |= up_[k];
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (leq(i, j) && leq(j, i)) return false;
    return true;
  }
  bool is_equivalence() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j) != leq(j, i)) return false;
    return true;
  }
  bool is_total() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (!leq(i, j) && !leq(j, i)) return false;
    return true;
  }
  bool is_codiscrete() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].count() != size()) return false;
    return true;
  }
  // Every relation of `p` holds here.
  bool contains(const FinPreorder& p) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!p.up_[i].subset_of(up_[i])) return false;
    return true;
  }
  bool is_downset(const Bitset& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) {
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(j, i) && !s.test(j)) ok = false;
    });
    return ok;
  }

  std::vector<std::pair<std::size_t, std::size_t>> relation() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j)) out.emplace_back(i, j);
    return out;
  }

  // The full subpreorder on `keep`, in that order.
  FinPreorder restricted(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> l;
    for (auto k : keep) l.push_back(labels_[k]);
    FinPreorder p(std::move(l));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b)
        if (leq(keep[a], keep[b])) p.up_[a].set(b);
    return p;
  }

  friend bool operator==(const FinPreorder& a, const FinPreorder& b) { return a.labels_ == b.labels_ && a.up_ == b.up_; }

 protected:
  std::vector<std::string> labels_;
  std::vector<Bitset> up_;
};

class FinPoset : public FinPreorder {
 public:
  FinPoset() = default;
  explicit FinPoset(FinPreorder p) : FinPreorder(std::move(p)) {
    if (!is_antisymmetric()) throw InputError("relation is not antisymmetric");
  }
  static FinPoset generated(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    return FinPoset(FinPreorder::generated(std::move(labels), pairs));
  }

  // Elements covering i (i < j with nothing strictly between).
  std::vector<std::size_t> upper_covers(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) out.push_back(j);
    }
    return out;
  }

  // A linear extension: indices sorted so that i < j in the order implies
  // i comes first.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> idx(size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::size_t> below(size());
    for (std::size_t i = 0; i < size(); ++i) below[i] = down(i).count();
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return idx;
  }
};

// Linear preorders refining p given as ordered block partitions.
inline std::vector<std::vector<Bitset>> ordered_partitions_refining(const FinPreorder& p) {
  const auto n = p.size();
  std::vector<std::vector<Bitset>> out;
  std::vector<Bitset> blocks;
  // The first block of the remainder must be a nonempty downset of it.
  std::function<void(Bitset)> go = [&](Bitset rest) {
    if (rest.none()) {
      out.push_back(blocks);
      return;
    }
    auto elems = rest.elements();
    if (elems.size() > 24) throw BudgetError("linear preorder enumeration carrier too large");
    const std::size_t m = elems.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Bitset b(n);
      for (std::size_t k = 0; k < m; ++k)
        if (mask >> k & 1u) b.set(elems[k]);
      bool down = true;
      b.for_each([&](std::size_t i) {
        for (std::size_t j : elems)
          if (p.leq(j, i) && !b.test(j)) down = false;
      });
      if (!down) continue;
      blocks.push_back(b);
      go(rest - b);
      blocks.pop_back();
    }
  };
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  if (n > 0) go(all);
  return out;
}

inline FinPreorder preorder_of_blocks(const std::vector<std::string>& labels, const std::vector<Bitset>& blocks) {
  FinPreorder l(labels);
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a; b < blocks.size(); ++b)
      blocks[a].for_each([&](std::size_t i) { blocks[b].for_each([&](std::size_t j) { l.add(i, j); }); });
  return l;
}

inline std::string blocks_label(const FinPreorder& p, const std::vector<Bitset>& blocks) {
  std::string s;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    if (a) s += '|';
    bool first = true;
    blocks[a].for_each([&](std::size_t i) {
      if (!first) s += ',';
      first = false;
      s += p.label(i);
    });
  }
  return s;
}

// L ≤ L' iff every relation of L' holds in L (L' is finer).
inline FinPoset poset_of_preorders(const std::vector<FinPreorder>& ls, std::vector<std::string> labels) {
  FinPreorder q(std::move(labels));
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < ls.size(); ++b)
      if (ls[a].contains(ls[b])) q.add(a, b);
  return FinPoset(std::move(q));
}

// Lin(P): non-codiscrete linear preorders refining P.
inline FinPoset lin(const FinPreorder& p) {
  std::vector<FinPreorder> ls;
  std::vector<std::string> labels;
  for (const auto& blocks : ordered_partitions_refining(p)) {
    if (blocks.size() < 2) continue;
    ls.push_back(preorder_of_blocks(p.labels(), blocks));
    labels.push_back(blocks_label(p, blocks));
  }
  return poset_of_preorders(ls, std::move(labels));
}

inline std::string set_label(const FinPreorder& p, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    first = false;
    out += p.label(i);
  });
  return out + "}";
}

// DC(P): nonempty proper downward-closed subsets under inclusion.
inline FinPoset dc(const FinPreorder& p) {
  const auto n = p.size();
  if (n > 22) throw BudgetError("downset enumeration carrier too large");
  std::vector<Bitset> sets;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    Bitset b(n);
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) b.set(k);
    if (p.is_downset(b)) sets.push_back(std::move(b));
  }
  std::vector<std::string> labels;
  for (const auto& s : sets) labels.push_back(set_label(p, s));
  FinPreorder q(std::move(labels));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (sets[a].subset_of(sets[b])) q.add(a, b);
  return FinPoset(std::move(q));
}

// Nonempty chains of p, each sorted along a linear extension.
inline std::vector<std::vector<std::size_t>> chains(const FinPoset& p, std::size_t budget = 10'000'000) {
  auto ext = p.linear_extension();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    for (std::size_t k = from; k < ext.size(); ++k) {
      std::size_t x = ext[k];
      if (!cur.empty() && !p.less(cur.back(), x)) continue;
      cur.push_back(x);
      if (out.size() >= budget) throw BudgetError("chain enumeration exceeded budget");
      out.push_back(cur);
      go(k + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

// Nonempty chains ordered by containment.
inline FinPoset barycentric_sd(const FinPoset& p, std::size_t budget = 1'000'000) {
  auto cs = chains(p, budget);
  std::vector<Bitset> sets;
  std::vector<std::string> labels;
  for (const auto& c : cs) {
    Bitset b(p.size());
    for (auto x : c) b.set(x);
    labels.push_back(set_label(p, b));
    sets.push_back(std::move(b));
  }
  FinPreorder q(std::move(labels));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (sets[a].subset_of(sets[b])) q.add(a, b);
  return FinPoset(std::move(q));
}

// Beat point: the strict up-set has a minimum or the strict down-set has a
// maximum. Removing one does not change the homotopy type.
inline bool is_beat_point(const FinPoset& p, const Bitset& alive, std::size_t x) {
  for (int side = 0; side < 2; ++side) {
    std::vector<std::size_t> strict;
    alive.for_each([&](std::size_t y) {
      if (y != x && (side == 0 ? p.less(x, y) : p.less(y, x))) strict.push_back(y);
    });
    if (strict.empty()) continue;
    for (std::size_t m : strict) {
      bool extremal = true;
      for (std::size_t y : strict)
        if (side == 0 ? !p.leq(m, y) : !p.leq(y, m)) {
          extremal = false;
          break;
        }
      if (extremal) return true;
    }
  }
  return false;
}

// Removes beat points until none is left; returns the surviving elements.
inline Bitset beat_core(const FinPoset& p) {
  Bitset alive(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) alive.set(i);
  bool changed = true;
  while (changed && alive.count() > 1) {
    changed = false;
    for (std::size_t x = 0; x < p.size() && alive.count() > 1; ++x)
      if (alive.test(x) && is_beat_point(p, alive, x)) {
        alive.reset(x);
        changed = true;
      }
  }
  return alive;
}

// True iff beat point removal reaches a single point.
inline bool dismantle(const FinPoset& p) { return !p.empty() && beat_core(p).count() == 1; }

inline FinPoset subposet(const FinPoset& p, const Bitset& keep) {
  auto idx = keep.elements();
  return FinPoset(p.restricted(idx));
}

// Exact isomorphism test: color refinement, then backtracking with
// individualization.
inline bool iso_check(const FinPoset& a, const FinPoset& b, std::size_t max_size = 4096) {
  if (a.size() != b.size()) return false;
  const auto n = a.size();
  if (n > max_size) throw BudgetError("isomorphism check input too large");
  if (a.relation().size() != b.relation().size()) return false;
  // Joint refinement over the disjoint union so colors are comparable.
  auto refine = [&](std::vector<std::size_t> ca, std::vector<std::size_t> cb) {
    for (;;) {
      std::map<std::vector<std::size_t>, std::size_t> palette;
      auto sig = [&](const FinPoset& p, const std::vector<std::size_t>& col, std::size_t x) {
        std::vector<std::size_t> s{col[x]};
        std::vector<std::size_t> ups, downs;
        for (std::size_t y = 0; y < n; ++y) {
          if (y == x) continue;
          if (p.leq(x, y)) ups.push_back(col[y]);
          if (p.leq(y, x)) downs.push_back(col[y]);
        }
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        s.push_back(ups.size());
        s.insert(s.end(), ups.begin(), ups.end());
        s.push_back(downs.size());
        s.insert(s.end(), downs.begin(), downs.end());
        return s;
      };
      std::vector<std::vector<std::size_t>> sa(n), sb(n);
      for (std::size_t x = 0; x < n; ++x) {
        sa[x] = sig(a, ca, x);
        sb[x] = sig(b, cb, x);
        palette.emplace(sa[x], 0);
        palette.emplace(sb[x], 0);
      }
      std::size_t k = 0;
      for (auto& [key, v] : palette) v = k++;
      std::vector<std::size_t> na(n), nb(n);
      for (std::size_t x = 0; x < n; ++x) {
        na[x] = palette[sa[x]];
        nb[x] = palette[sb[x]];
      }
      auto classes = [](const std::vector<std::size_t>& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); };
      bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
      ca = std::move(na);
      cb = std::move(nb);
      if (stable) return std::make_pair(ca, cb);
    }
  };
  std::function<bool(std::vector<std::size_t>, std::vector<std::size_t>)> search =
      [&](std::vector<std::size_t> ca, std::vector<std::size_t> cb) -> bool {
    std::tie(ca, cb) = refine(std::move(ca), std::move(cb));
    std::vector<std::size_t> ha(ca), hb(cb);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    // Pick the smallest nontrivial color class.
    std::map<std::size_t, std::vector<std::size_t>> cls_a, cls_b;
    for (std::size_t x = 0; x < n; ++x) {
      cls_a[ca[x]].push_back(x);
      cls_b[cb[x]].push_back(x);
    }
    std::size_t best = 0, best_size = 0;
    for (auto& [c, v] : cls_a)
      if (v.size() > 1 && (best_size == 0 || v.size() < best_size)) {
        best = c;
        best_size = v.size();
      }
    if (best_size == 0) {
      std::vector<std::size_t> map(n);
      for (std::size_t x = 0; x < n; ++x) map[x] = cls_b[ca[x]].front();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
      return true;
    }
    std::size_t x = cls_a[best].front();
    const std::size_t fresh = n + 1 + *std::max_element(ca.begin(), ca.end());
    for (std::size_t y : cls_b[best]) {
      auto na = ca, nb = cb;
      na[x] = fresh;
      nb[y] = fresh;
      if (search(na, nb)) return true;
    }
    return false;
  };
  return search(std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0));
}

// All preorders on n ≤ 5 points, one per isomorphism class, with labels
// "0", "1", ...
inline std::vector<FinPreorder> preorders_up_to_iso(std::size_t n) {
  if (n > 5) throw BudgetError("preorder enumeration limited to 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::size_t> perm(n);
  std::set<std::vector<bool>> seen;
  std::vector<FinPreorder> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    FinPreorder p(labels);
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (mask >> k & 1u) p.add(offdiag[k].first, offdiag[k].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) transitive = false;
    if (!transitive) continue;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<bool> canon;
    do {
      std::vector<bool> m(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[perm[i] * n + perm[j]] = p.leq(i, j);
      if (canon.empty() || m < canon) canon = std::move(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canon).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tfc
