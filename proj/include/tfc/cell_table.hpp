#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "tfc/cell.hpp"

namespace tfc {

using CellId = std::uint32_t;

struct Composition {
  int i;
  CellId a;  // first factor
  CellId b;  // second factor
  CellId result;
};

enum class Traversal { fifo, lifo };

struct EnumerateOptions {
  std::size_t max_cells = 2'000'000;
  Traversal order = Traversal::fifo;
};

// All cells of F(P), each stored reduced (formal = intrinsic dimension),
// with boundary ids and every nontrivial composition b ∘_i a
// (i below both intrinsic dimensions). Ids are assigned in sorted order
// of (dimension, sets), so they do not depend on the traversal.
class CellTable {
 public:
  CellTable() = default;

  CellTable(const Complex& p, const EnumerateOptions& opt = {}) : p_(&p) { build(opt); }
  // The table keeps a pointer to the complex.
  CellTable(Complex&&, const EnumerateOptions& = {}) = delete;

  const Complex& complex() const { return *p_; }
  std::size_t size() const { return cells_.size(); }
  const Cell& cell(CellId id) const { return cells_[id]; }
  const std::vector<Cell>& cells() const { return cells_; }
  int dim(CellId id) const { return cells_[id].dim(); }

  std::optional<CellId> find(const Cell& x) const {
    auto it = index_.find(reduced(x));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  CellId id_of(const Cell& x) const {
    auto r = find(x);
    if (!r) throw InputError("cell is not a cell of F(P)");
    return *r;
  }

  // ∂_{εk} of a cell, as a cell id; the cell itself for k ≥ its dimension.
  CellId bd(CellId c, Sign s, int k) const {
    if (k >= dim(c)) return c;
    return bd_[c][2 * static_cast<std::size_t>(k) + (s == Sign::plus)];
  }

  // b ∘_i a, if defined. Units are resolved without lookup.
  std::optional<CellId> compose(CellId b, CellId a, int i) const {
    if (bd(a, Sign::plus, i) != bd(b, Sign::minus, i)) return std::nullopt;
    if (dim(a) <= i) return b;
    if (dim(b) <= i) return a;
    auto it = comp_.find(key(i, a, b));
    if (it == comp_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Composition>& compositions() const { return comps_; }

  // Pairs (a, b) with c = b ∘_k a and both factors of dimension > k.
  const std::vector<std::pair<CellId, CellId>>& splits(CellId c, int k) const {
    static const std::vector<std::pair<CellId, CellId>> none;
    auto it = splits_.find(key(k, c, 0));
    return it == splits_.end() ? none : it->second;
  }

  // Cells with given dimension (exactly).
  std::vector<CellId> of_dim(int d) const {
    std::vector<CellId> out;
    for (CellId c = 0; c < size(); ++c)
      if (dim(c) == d) out.push_back(c);
    return out;
  }

  // Count of cells with intrinsic dimension ≤ k, for k = 0..dim P.
  std::vector<std::size_t> counts_up_to_dim() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(0, p_->dim() + 1)), 0);
    for (const auto& c : cells_)
      for (int k = c.dim(); k <= p_->dim(); ++k) ++out[static_cast<std::size_t>(k)];
    return out;
  }

  std::optional<CellId> atom_cell_id(AtomIndex a) const { return find(atom_cell(*p_, a)); }

 private:
  static std::uint64_t key(int i, CellId a, CellId b) {
    return (static_cast<std::uint64_t>(i) << 58) ^ (static_cast<std::uint64_t>(a) << 29) ^ b;
  }

  void build(const EnumerateOptions& opt) {
    const Complex& p = *p_;
    std::vector<Cell> cells;
    std::unordered_map<Cell, CellId, CellHash> index;
    std::vector<std::vector<CellId>> bds;
    // by_src[i][x]: cells of dim > i whose ∂_{-i} is x; by_tgt likewise.
    std::vector<std::unordered_map<CellId, std::vector<CellId>>> by_src(static_cast<std::size_t>(std::max(p.dim(), 0)));
    std::vector<std::unordered_map<CellId, std::vector<CellId>>> by_tgt(by_src.size());
    std::vector<Composition> comps;

    auto boundary_id = [&](const Cell& x, Sign s, int k) {
      return index.at(reduced(boundary(x, s, k)));
    };
    auto intern = [&](Cell x, std::deque<CellId>& work) -> CellId {
      auto it = index.find(x);
      if (it != index.end()) return it->second;
      if (cells.size() >= opt.max_cells)
        throw BudgetError("cell enumeration exceeded " + std::to_string(opt.max_cells) + " cells");
      auto id = static_cast<CellId>(cells.size());
      std::vector<CellId> b;
      for (int k = 0; k < x.dim(); ++k) {
        b.push_back(boundary_id(x, Sign::minus, k));
        b.push_back(boundary_id(x, Sign::plus, k));
      }
      index.emplace(x, id);
      cells.push_back(std::move(x));
      bds.push_back(std::move(b));
      work.push_back(id);
      return id;
    };
    auto bd_of = [&](CellId c, Sign s, int k) -> CellId {
      if (k >= cells[c].dim()) return c;
      return bds[c][2 * static_cast<std::size_t>(k) + (s == Sign::plus)];
    };

    for (int d = 0; d <= p.dim(); ++d) {
      std::deque<CellId> work;
      for (AtomIndex a : p.atoms_of_dim(d)) intern(atom_cell(p, a), work);
      while (!work.empty()) {
        CellId x;
        if (opt.order == Traversal::fifo) {
          x = work.front();
          work.pop_front();
        } else {
          x = work.back();
          work.pop_back();
        }
        for (int i = 0; i < d; ++i) {
          by_src[static_cast<std::size_t>(i)][bd_of(x, Sign::minus, i)].push_back(x);
          by_tgt[static_cast<std::size_t>(i)][bd_of(x, Sign::plus, i)].push_back(x);
        }
        for (int i = 0; i < d; ++i) {
          // y ∘_i x
          auto ys = by_src[static_cast<std::size_t>(i)][bd_of(x, Sign::plus, i)];
          for (CellId y : ys) {
            if (y == x && !(bd_of(x, Sign::minus, i) == bd_of(x, Sign::plus, i))) continue;
            auto r = intern(reduced(compose_padded(cells[y], cells[x], i)), work);
            comps.push_back({i, x, y, r});
          }
          // x ∘_i y, skipping y == x (already recorded above)
          auto zs = by_tgt[static_cast<std::size_t>(i)][bd_of(x, Sign::minus, i)];
          for (CellId y : zs) {
            if (y == x) continue;
            auto r = intern(reduced(compose_padded(cells[x], cells[y], i)), work);
            comps.push_back({i, y, x, r});
          }
        }
      }
    }

    // Canonical renumbering.
    std::vector<CellId> order(cells.size());
    std::iota(order.begin(), order.end(), CellId{0});
    std::sort(order.begin(), order.end(), [&](CellId a, CellId b) { return cells[a] < cells[b]; });
    std::vector<CellId> rename(cells.size());
    for (CellId k = 0; k < order.size(); ++k) rename[order[k]] = k;
    cells_.reserve(cells.size());
    bd_.resize(cells.size());
    for (CellId k = 0; k < order.size(); ++k) {
      cells_.push_back(std::move(cells[order[k]]));
      for (CellId b : bds[order[k]]) bd_[k].push_back(rename[b]);
      index_.emplace(cells_.back(), k);
    }
    comps_.reserve(comps.size());
    for (auto& c : comps) comps_.push_back({c.i, rename[c.a], rename[c.b], rename[c.result]});
    std::sort(comps_.begin(), comps_.end(), [](const Composition& x, const Composition& y) {
      return std::tie(x.i, x.a, x.b) < std::tie(y.i, y.a, y.b);
    });
    comps_.erase(std::unique(comps_.begin(), comps_.end(),
                             [](const Composition& x, const Composition& y) {
                               return x.i == y.i && x.a == y.a && x.b == y.b;
                             }),
                 comps_.end());
    for (const auto& c : comps_) {
      comp_.emplace(key(c.i, c.a, c.b), c.result);
      splits_[key(c.i, c.result, 0)].emplace_back(c.a, c.b);
    }
  }

  const Complex* p_ = nullptr;
  std::vector<Cell> cells_;
  std::unordered_map<Cell, CellId, CellHash> index_;
  std::vector<std::vector<CellId>> bd_;
  std::vector<Composition> comps_;
  std::unordered_map<std::uint64_t, CellId> comp_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<CellId, CellId>>> splits_;
};

// A cell whose support generates the whole complex, if there is one. Among
// several such the one of largest dimension is returned.
inline std::optional<CellId> big_cell(const CellTable& t) {
  const Bitset all = t.complex().all_atoms();
  std::optional<CellId> out;
  for (CellId c = 0; c < t.size(); ++c)
    if (closure(t.complex(), t.cell(c).support()).members == all) out = c;
  return out;
}

// Report form of the enumeration: cells with intrinsic dimension ≤ k, per k.
struct CellSetReport {
  std::vector<std::vector<Cell>> cells_by_dim;
};

inline CellSetReport enumerate_cells(const Complex& p, const EnumerateOptions& opt = {}) {
  CellTable t(p, opt);
  CellSetReport r;
  r.cells_by_dim.resize(static_cast<std::size_t>(std::max(0, p.dim() + 1)));
  for (int k = 0; k <= p.dim(); ++k)
    for (const auto& c : t.cells())
      if (c.dim() <= k) r.cells_by_dim[static_cast<std::size_t>(k)].push_back(identity(c, k));
  return r;
}

}  // namespace tfc
