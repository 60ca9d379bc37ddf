#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tfc/poset.hpp"

namespace tfc {

using BigInt = boost::multiprecision::cpp_int;

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced integral homology of an order complex, indexed by degree.
struct HomologyReport {
  bool empty = false;  // empty poset: no augmented chain complex to speak of
  std::vector<HomologyGroup> groups;
  std::size_t simplices = 0;
  std::size_t core_size = 0;

  bool trivial() const {
    if (empty) return false;
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
  }
  const HomologyGroup& degree(std::size_t d) const {
    static const HomologyGroup zero;
    return d < groups.size() ? groups[d] : zero;
  }
  std::string describe() const {
    if (empty) return "empty";
    std::string s;
    for (std::size_t d = 0; d < groups.size(); ++d) {
      if (groups[d].trivial()) continue;
      if (!s.empty()) s += ", ";
      s += "H" + std::to_string(d) + " = Z^" + std::to_string(groups[d].rank);
      for (const auto& t : groups[d].torsion) s += " + Z/" + t.str();
    }
    return s.empty() ? "trivial" : s;
  }
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul_sub(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul_sub(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

// Sparse rows of (column, value), sorted by column.
template <class T>
using SparseRows = std::vector<std::vector<std::pair<std::size_t, T>>>;

// Eliminates unit pivots, then runs a dense Smith reduction on what is
// left. Returns the nonzero diagonal entries (absolute values).
template <class T>
std::vector<BigInt> smith_diagonal(SparseRows<T> rows, std::size_t ncols) {
  std::vector<BigInt> diag;
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  std::vector<bool> row_alive(rows.size(), true), col_alive(ncols, true);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  auto entry = [&](std::size_t r, std::size_t c) -> const T* {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };
  // Rows sorted by length so short pivots are taken first.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) order[r] = r;
  bool progress = true;
  while (progress) {
    progress = false;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    for (std::size_t pr : order) {
      if (!row_alive[pr] || rows[pr].empty()) continue;
      std::size_t pc = ncols;
      T pv{};
      for (auto& [c, v] : rows[pr])
        if (is_unit(v)) {
          pc = c;
          pv = v;
          break;
        }
      if (pc == ncols) continue;
      const auto pivot_row = rows[pr];
      for (std::size_t r : std::vector<std::size_t>(col_rows[pc])) {
        if (r == pr || !row_alive[r]) continue;
        const T* e = entry(r, pc);
        if (!e) continue;
        T f = *e * pv;  // pv is ±1, so v / pv == v * pv
        std::vector<std::pair<std::size_t, T>> merged;
        merged.reserve(rows[r].size() + pivot_row.size());
        auto i = rows[r].begin();
        auto j = pivot_row.begin();
        while (i != rows[r].end() || j != pivot_row.end()) {
          if (j == pivot_row.end() || (i != rows[r].end() && i->first < j->first)) {
            merged.push_back(*i++);
          } else if (i == rows[r].end() || j->first < i->first) {
            T v = checked_mul_sub(T(0), f, j->second);
            merged.emplace_back(j->first, v);
            col_rows[j->first].push_back(r);
            ++j;
          } else {
            T v = checked_mul_sub(i->second, f, j->second);
            if (v != 0) merged.emplace_back(i->first, v);
            ++i;
            ++j;
          }
        }
        rows[r] = std::move(merged);
      }
      row_alive[pr] = false;
      col_alive[pc] = false;
      rows[pr].clear();
      diag.push_back(1);
      progress = true;
    }
  }
  // Dense remainder.
  std::vector<std::size_t> rs, cs;
  std::map<std::size_t, std::size_t> cidx;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (row_alive[r] && !rows[r].empty()) rs.push_back(r);
  for (std::size_t r : rs)
    for (auto& [c, v] : rows[r])
      if (col_alive[c] && !cidx.count(c)) cidx.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, i] : cidx) i = k++;
  if (rs.empty() || cidx.empty()) return diag;
  const std::size_t m = rs.size(), n = cidx.size();
  if (m * n > 50'000'000) throw BudgetError("dense Smith remainder too large");
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (auto& [c, v] : rows[rs[i]])
      if (col_alive[c]) a[i][cidx[c]] = BigInt(v);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry in the lower-right block as pivot.
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) goto done;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
done:
  return diag;
}

inline std::vector<BigInt> invariant_factors(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

// A boundary matrix as sparse rows indexed by (d-1)-simplices; columns are
// d-simplices.
struct BoundaryMatrix {
  std::size_t rows = 0, cols = 0;
  detail::SparseRows<std::int64_t> entries;
};

// Smith normal form diagonal of an integer matrix, with int64 elimination
// falling back to arbitrary precision on overflow.
inline std::vector<BigInt> smith_diagonal(const BoundaryMatrix& m) {
  try {
    return detail::smith_diagonal<std::int64_t>(m.entries, m.cols);
  } catch (const detail::Overflow&) {
    detail::SparseRows<BigInt> big(m.entries.size());
    for (std::size_t r = 0; r < m.entries.size(); ++r)
      for (auto& [c, v] : m.entries[r]) big[r].emplace_back(c, BigInt(v));
    return detail::smith_diagonal<BigInt>(std::move(big), m.cols);
  }
}

// Augmented chain complex of the order complex: degree -1 is Z, degree d
// has the chains with d + 1 elements.
struct ChainComplex {
  std::vector<std::size_t> ranks;          // ranks[d + 1] = number of d-simplices
  std::vector<BoundaryMatrix> boundaries;  // boundaries[d] : C_d -> C_{d-1}, d ≥ 0
};

inline ChainComplex order_complex(const FinPoset& p, std::size_t budget = 5'000'000) {
  auto cs = chains(p, budget);
  std::size_t top = 0;
  for (const auto& c : cs) top = std::max(top, c.size());
  std::vector<std::vector<std::vector<std::size_t>>> by_dim(top);
  for (auto& c : cs) by_dim[c.size() - 1].push_back(std::move(c));
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  ChainComplex cc;
  cc.ranks.push_back(1);
  for (auto& v : by_dim) cc.ranks.push_back(v.size());
  for (std::size_t d = 0; d < top; ++d) {
    BoundaryMatrix m;
    m.cols = by_dim[d].size();
    m.rows = d == 0 ? 1 : by_dim[d - 1].size();
    m.entries.assign(m.rows, {});
    for (std::size_t col = 0; col < by_dim[d].size(); ++col) {
      const auto& s = by_dim[d][col];
      if (d == 0) {
        m.entries[0].emplace_back(col, 1);
        continue;
      }
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        auto it = std::lower_bound(by_dim[d - 1].begin(), by_dim[d - 1].end(), f);
        m.entries[static_cast<std::size_t>(it - by_dim[d - 1].begin())].emplace_back(col, k % 2 == 0 ? 1 : -1);
      }
    }
    for (auto& row : m.entries) std::sort(row.begin(), row.end());
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

struct HomologyOptions {
  // Strip beat points first; this preserves the homotopy type.
  bool core_reduce = true;
  std::size_t max_simplices = 5'000'000;
};

inline HomologyReport homology_of(const ChainComplex& cc) {
  HomologyReport r;
  const std::size_t top = cc.boundaries.size();
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<std::vector<BigInt>> tors(top + 1);
  for (std::size_t d = 0; d < top; ++d) {
    auto diag = smith_diagonal(cc.boundaries[d]);
    rank[d] = diag.size();
    for (auto& v : diag)
      if (v > 1) tors[d].push_back(v);
  }
  for (std::size_t d = 0; d < top; ++d) {
    HomologyGroup g;
    // H_d = ker ∂_d / im ∂_{d+1}
    std::size_t ker = cc.ranks[d + 1] - rank[d];
    std::size_t im = d + 1 < top ? rank[d + 1] : 0;
    g.rank = ker - im;
    if (d + 1 < top) g.torsion = detail::invariant_factors(tors[d + 1]);
    g.torsion.erase(std::remove(g.torsion.begin(), g.torsion.end(), BigInt(1)), g.torsion.end());
    r.groups.push_back(std::move(g));
    r.simplices += cc.ranks[d + 1];
  }
  return r;
}

// Reduced integral homology of the order complex of p.
inline HomologyReport homology(const FinPoset& p, const HomologyOptions& opt = {}) {
  if (p.empty()) {
    HomologyReport r;
    r.empty = true;
    return r;
  }
  FinPoset q = opt.core_reduce ? subposet(p, beat_core(p)) : p;
  auto r = homology_of(order_complex(q, opt.max_simplices));
  r.core_size = q.size();
  return r;
}

// H̃ of the (d-2)-sphere, as a report to compare against.
inline HomologyReport sphere_homology(int dim) {
  HomologyReport r;
  r.groups.resize(static_cast<std::size_t>(std::max(dim, 0)) + 1);
  if (dim >= 0) r.groups[static_cast<std::size_t>(dim)].rank = 1;
  return r;
}

// Equal up to trailing trivial groups.
inline bool same_homology(const HomologyReport& a, const HomologyReport& b) {
  if (a.empty != b.empty) return false;
  std::size_t n = std::max(a.groups.size(), b.groups.size());
  for (std::size_t d = 0; d < n; ++d)
    if (!(a.degree(d) == b.degree(d))) return false;
  return true;
}

}  // namespace tfc
