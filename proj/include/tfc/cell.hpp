#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tfc/complex.hpp"

namespace tfc {

// A cell of F(P): sets (c_{-0}, c_0, ..., c_{-n}, c_n) of atoms, c_{±i} of
// dimension i, with c_{-n} == c_n. Stored with the formal dimension n; the
// complex is passed separately to the operations that need it.
class Cell {
 public:
  Cell() = default;
  Cell(int n, std::size_t width) : n_(n), sets_(2 * static_cast<std::size_t>(n + 1), Bitset(width)) {}

  int dim() const { return n_; }
  std::size_t width() const { return sets_.empty() ? 0 : sets_[0].size(); }

  const Bitset& at(Sign s, int i) const { return sets_[slot(s, i)]; }
  Bitset& at(Sign s, int i) { return sets_[slot(s, i)]; }
  const Bitset& minus(int i) const { return at(Sign::minus, i); }
  const Bitset& plus(int i) const { return at(Sign::plus, i); }

  // Largest i with a nonempty set at level i; the cell is an identity above it.
  int intrinsic_dim() const {
    for (int i = n_; i >= 1; --i)
      if (minus(i).any() || plus(i).any()) return i;
    return 0;
  }

  // Union of all sets.
  Bitset support() const {
    Bitset out(width());
    for (const auto& s : sets_) out |= s;
    return out;
  }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.sets_ <=> b.sets_;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (const auto& s : sets_) h = (h ^ s.hash()) * 0x100000001b3ull;
    return h;
  }

 private:
  static std::size_t slot(Sign s, int i) { return 2 * static_cast<std::size_t>(i) + (s == Sign::plus ? 1 : 0); }

  int n_ = -1;
  std::vector<Bitset> sets_;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const { return c.hash(); }
};

// S moves X to Y: S^∓ = X \ Y and S^± = Y \ X.
inline bool moves(const Complex& c, const Bitset& s, const Bitset& x, const Bitset& y) {
  int d = -1;
  s.for_each([&](std::size_t a) {
    int ad = c.dim(static_cast<AtomIndex>(a));
    if (d >= 0 && ad != d) throw InputError("moving set has atoms of mixed dimension");
    d = ad;
  });
  return c.net_faces(s, Sign::minus) == (x - y) && c.net_faces(s, Sign::plus) == (y - x);
}

// Fork-free set of i-atoms: a singleton for i = 0, pairwise disjoint minus
// sets and pairwise disjoint plus sets otherwise.
inline bool fork_free(const Complex& c, const Bitset& s, int i) {
  if (i == 0) return s.count() == 1;
  Bitset seen_m(c.size()), seen_p(c.size());
  bool ok = true;
  s.for_each([&](std::size_t a) {
    const auto& m = c.minus(static_cast<AtomIndex>(a));
    const auto& p = c.plus(static_cast<AtomIndex>(a));
    if (m.intersects(seen_m) || p.intersects(seen_p)) ok = false;
    seen_m |= m;
    seen_p |= p;
  });
  return ok;
}

struct CellCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline CellCheck is_cell(const Complex& c, const Cell& x) {
  if (x.dim() < 0) return {false, "no sets"};
  if (x.width() != c.size()) return {false, "cell belongs to a different complex"};
  const int n = x.dim();
  for (int i = 0; i <= n; ++i)
    for (Sign s : {Sign::minus, Sign::plus}) {
      std::string key = std::string(1, sign_char(s)) + std::to_string(i);
      bool dims_ok = true;
      x.at(s, i).for_each([&](std::size_t a) {
        if (c.dim(static_cast<AtomIndex>(a)) != i) dims_ok = false;
      });
      if (!dims_ok) return {false, "set " + key + " has atoms of the wrong dimension"};
      if (!fork_free(c, x.at(s, i), i)) return {false, "set " + key + " is not fork-free"};
    }
  if (x.minus(n) != x.plus(n)) return {false, "top sets differ"};
  for (int i = 0; i < n; ++i)
    for (Sign s : {Sign::minus, Sign::plus})
      if (!moves(c, x.at(s, i + 1), x.minus(i), x.plus(i)))
        return {false, std::string("set ") + sign_char(s) + std::to_string(i + 1) + " does not move -" +
                           std::to_string(i) + " to +" + std::to_string(i)};
  return {};
}

// <a>: top sets {a}, then <a>_{i-1} = (<a>_i)^± and <a>_{-(i-1)} = (<a>_i)^∓.
inline Cell atom_cell(const Complex& c, AtomIndex a) {
  const int n = c.dim(a);
  Cell x(n, c.size());
  x.at(Sign::minus, n).set(a);
  x.at(Sign::plus, n).set(a);
  for (int i = n; i >= 1; --i) {
    x.at(Sign::plus, i - 1) = c.net_faces(x.plus(i), Sign::plus);
    x.at(Sign::minus, i - 1) = c.net_faces(x.plus(i), Sign::minus);
  }
  return x;
}

inline Cell atom_cell(const Complex& c, const std::string& id) { return atom_cell(c, c.index(id)); }

// ∂_{εi}: truncate to dimension i and duplicate the ε-side set at the top.
inline Cell boundary(const Cell& x, Sign s, int i) {
  if (i < 0 || i > x.dim()) throw InputError("boundary index " + std::to_string(i) + " exceeds cell dimension");
  Cell out(i, x.width());
  for (int j = 0; j < i; ++j) {
    out.at(Sign::minus, j) = x.minus(j);
    out.at(Sign::plus, j) = x.plus(j);
  }
  out.at(Sign::minus, i) = x.at(s, i);
  out.at(Sign::plus, i) = x.at(s, i);
  return out;
}

// Pads with empty sets up to formal dimension target_dim.
inline Cell identity(const Cell& x, int target_dim) {
  if (target_dim < x.dim()) throw DimensionError("identity target below cell dimension");
  Cell out(target_dim, x.width());
  for (int j = 0; j <= x.dim(); ++j) {
    out.at(Sign::minus, j) = x.minus(j);
    out.at(Sign::plus, j) = x.plus(j);
  }
  return out;
}

// Truncates to the intrinsic dimension.
inline Cell reduced(const Cell& x) {
  const int d = x.intrinsic_dim();
  return d == x.dim() ? x : boundary(x, Sign::plus, d);
}

// Cells of equal formal dimension agree up to padding.
inline bool same_cell(const Cell& a, const Cell& b) { return reduced(a) == reduced(b); }

// b ∘_i a for cells of the same formal dimension n > i.
inline Cell compose(const Cell& b, const Cell& a, int i) {
  if (a.dim() != b.dim()) throw DimensionError("composed cells have different formal dimensions");
  const int n = a.dim();
  if (i < 0 || i >= n) throw DimensionError("composition index " + std::to_string(i) + " not below dimension");
  for (int j = 0; j < i; ++j)
    if (a.minus(j) != b.minus(j) || a.plus(j) != b.plus(j))
      throw BoundaryMismatch("boundaries do not match at level " + std::to_string(j));
  if (a.plus(i) != b.minus(i)) throw BoundaryMismatch("target of first factor differs from source of second");
  Cell out(n, a.width());
  for (int j = 0; j < i; ++j) {
    out.at(Sign::minus, j) = a.minus(j);
    out.at(Sign::plus, j) = a.plus(j);
  }
  out.at(Sign::minus, i) = a.minus(i);
  out.at(Sign::plus, i) = b.plus(i);
  for (int j = i + 1; j <= n; ++j)
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (a.at(s, j).intersects(b.at(s, j)))
        throw BoundaryMismatch("composite sets overlap at level " + std::to_string(j));
      out.at(s, j) = a.at(s, j) | b.at(s, j);
    }
  return out;
}

// Composite of cells of any dimensions, padding the smaller with identities.
inline Cell compose_padded(const Cell& b, const Cell& a, int i) {
  const int n = std::max({a.dim(), b.dim(), i + 1});
  return compose(identity(b, n), identity(a, n), i);
}

}  // namespace tfc
